// Values computed with mpmath at 40 significant digits.

pub const I0_SMALL: [(f64, f64); 50] = [
    (0.0, 1.0),
    (0.6122448979591837, 1.0959293834708812),
    (1.2244897959183674, 1.411468595141839),
    (1.836734693877551, 2.0388022979860967),
    (2.4489795918367347, 3.1643629934865003),
    (3.061224489795918, 5.129637868315655),
    (3.673469387755102, 8.54369174758797),
    (4.285714285714286, 14.485990328614786),
    (4.8979591836734695, 24.86951670548721),
    (5.510204081632653, 43.090265345538036),
    (6.122448979591836, 75.18993738463608),
    (6.73469387755102, 131.94004070860305),
    (7.346938775510204, 232.58263575211615),
    (7.959183673469388, 411.5532537460416),
    (8.571428571428571, 730.5778947785069),
    (9.183673469387756, 1300.4640183792255),
    (9.795918367346939, 2320.3938116743916),
    (10.408163265306122, 4148.843896932232),
    (11.020408163265307, 7431.698145277655),
    (11.63265306122449, 13333.863076329677),
    (12.244897959183673, 23958.318661503487),
    (12.857142857142858, 43104.81452693762),
    (13.46938775510204, 77644.38939200579),
    (14.081632653061224, 140011.0797063719),
    (14.693877551020408, 252721.41928886747),
    (15.306122448979592, 456576.3493011161),
    (15.918367346938776, 825553.3654548293),
    (16.53061224489796, 1493858.845504566),
    (17.142857142857142, 2705091.834001384),
    (17.755102040816325, 4901629.864870915),
    (18.367346938775512, 8887208.086438263),
    (18.979591836734695, 16122737.290252164),
    (19.591836734693878, 29264746.99746012),
    (20.20408163265306, 53145783.63124885),
    (20.816326530612244, 96560098.09218915),
    (21.428571428571427, 175517080.05076927),
    (22.040816326530614, 319170592.14749396),
    (22.653061224489797, 580628114.3058745),
    (23.26530612244898, 1056661021.8532267),
    (23.877551020408163, 1923655103.3244245),
    (24.489795918367346, 3503198462.6402187),
    (25.102040816326532, 6381767711.981858),
    (25.714285714285715, 11629182921.746548),
    (26.3265306122449, 21197424293.543125),
    (26.93877551020408, 38648872258.63333),
    (27.551020408163264, 70486339929.87932),
    (28.163265306122447, 128582662888.92068),
    (28.775510204081634, 234619683590.24103),
    (29.387755102040817, 428199940317.26917),
    (30.0, 781672297823.9775),
];

pub const I0E: [(f64, f64); 50] = [
    (0.001, 0.9990007495835156),
    (0.0013160964422098528, 0.9986852016908775),
    (0.0017321098451974323, 0.9982701381445444),
    (0.0022796236047809993, 0.9977242689769379),
    (0.003000204515829873, 0.9970065351669755),
    (0.00394855848918563, 0.9960631092396595),
    (0.005196683779474719, 0.9948235120203),
    (0.006839337033456328, 0.9931956124625265),
    (0.009001227136805961, 0.9910592367492067),
    (0.011846483010273107, 0.9882580822155578),
    (0.015591114142519902, 0.984589629560482),
    (0.02051940985305816, 0.9797928070205799),
    (0.027005522303855643, 0.9735333411107532),
    (0.03554187182412324, 0.9653871266360535),
    (0.04677653105720721, 0.9548227146161883),
    (0.06156242610330909, 0.9411853689394521),
    (0.08102208996837205, 0.9236873614065808),
    (0.10663288434778107, 0.9014125383607288),
    (0.14033915971268934, 0.8733477726846721),
    (0.18469986880059075, 0.8384591023658968),
    (0.24308284020508408, 0.7958339477410815),
    (0.31992046115617734, 0.7449076516420275),
    (0.4210461807177804, 0.6857735436856937),
    (0.5541373804487174, 0.619529314984546),
    (0.7292982349040447, 0.5485346059781439),
    (0.9598268122671386, 0.4763716260185972),
    (1.2632246527624054, 0.407296491033139),
    (1.6625254712123783, 0.34516854111746376),
    (2.1880438577458703, 0.2922690695870644),
    (2.879676736578461, 0.24875724671758956),
    (3.7899323077253917, 0.2132108348498356),
    (4.987916426413565, 0.18377773464994643),
    (6.564579062842975, 0.15898042427316234),
    (8.63961914921293, 0.13783657317748796),
    (11.370572024327252, 0.11968112933615607),
    (14.96476938710798, 0.10402395521863393),
    (19.69507974886373, 0.09048186916668786),
    (25.920624386518874, 0.07874514982686316),
    (34.11404153495544, 0.06855811730532091),
    (44.897368693554, 0.0597066276218929),
    (59.08926720217044, 0.05200946711026074),
    (77.76717433756386, 0.04531213485736672),
    (102.34910146638116, 0.039482175523981436),
    (134.70128830327945, 0.03440556665832777),
    (177.27988629702975, 0.029983851843768207),
    (233.3174276308881, 0.026131819546193934),
    (307.0682364105666, 0.022775593244407026),
    (404.1314134556007, 0.019851039664889002),
    (531.8759154341551, 0.017302428616884417),
    (700.0, 0.015081295651531358),
];

pub const ELLIPTIC_K: [(f64, f64); 50] = [
    (0.0, 1.5707963267948966),
    (0.020387755102040817, 1.5709595944899222),
    (0.040775510204081634, 1.5714498562113561),
    (0.06116326530612245, 1.5722684918518768),
    (0.08155102040816327, 1.5734178145826963),
    (0.10193877551020408, 1.5749010911307568),
    (0.1223265306122449, 1.57672257067891),
    (0.1427142857142857, 1.5788875229201451),
    (0.16310204081632654, 1.5814022859767523),
    (0.18348979591836734, 1.5842743250980318),
    (0.20387755102040817, 1.5875123032830538),
    (0.224265306122449, 1.591126165246881),
    (0.2446530612244898, 1.5951272364704556),
    (0.2650408163265306, 1.599528339459674),
    (0.2854285714285714, 1.6043439298052988),
    (0.30581632653061225, 1.6095902552044214),
    (0.3262040816326531, 1.6152855413047704),
    (0.3465918367346939, 1.6214502091026008),
    (0.3669795918367347, 1.6281071297122092),
    (0.38736734693877556, 1.635281923695453),
    (0.40775510204081633, 1.6430033138801492),
    (0.4281428571428571, 1.6513035428246539),
    (0.448530612244898, 1.6602188689629316),
    (0.46891836734693876, 1.669790159211413),
    (0.4893061224489796, 1.6800636007442993),
    (0.5096938775510205, 1.6910915611823083),
    (0.5300816326530612, 1.70293363521113),
    (0.550469387755102, 1.7156579275462807),
    (0.5708571428571428, 1.7293426385046697),
    (0.5912448979591837, 1.7440780411867098),
    (0.6116326530612245, 1.7599689713786781),
    (0.6320204081632653, 1.7771379973210824),
    (0.6524081632653062, 1.7957295036391367),
    (0.6727959183673469, 1.8159150235449395),
    (0.6931836734693878, 1.8379003049154627),
    (0.7135714285714286, 1.861934831192821),
    (0.7339591836734694, 1.888324893300162),
    (0.7543469387755102, 1.9174519249453295),
    (0.7747346938775511, 1.9497988599397318),
    (0.7951224489795918, 1.9859891163861372),
    (0.8155102040816327, 2.0268462195685952),
    (0.8358979591836735, 2.0734887031105997),
    (0.8562857142857142, 2.1274886625971234),
    (0.8766734693877551, 2.1911530869880695),
    (0.897061224489796, 2.2680629716565135),
    (0.9174489795918367, 2.364217727253734),
    (0.9378367346938775, 2.4908406223056887),
    (0.9582244897959185, 2.6729618588274433),
    (0.9786122448979592, 2.9888475334485887),
    (0.999, 4.495596395842144),
];

pub const ELLIPTIC_E: [(f64, f64); 50] = [
    (0.0, 1.5707963267948966),
    (0.02040816326530612, 1.5706327575513066),
    (0.04081632653061224, 1.5701418964170903),
    (0.061224489795918366, 1.569323282381408),
    (0.08163265306122448, 1.568176144414261),
    (0.10204081632653061, 1.5666993974124455),
    (0.12244897959183673, 1.5648916364507),
    (0.14285714285714285, 1.5627511292627545),
    (0.16326530612244897, 1.5602758068523692),
    (0.1836734693877551, 1.5574632521073497),
    (0.20408163265306123, 1.5543106862591691),
    (0.22448979591836735, 1.550814952996357),
    (0.24489795918367346, 1.5469725000001477),
    (0.2653061224489796, 1.5427793576247337),
    (0.2857142857142857, 1.5382311143902507),
    (0.30612244897959184, 1.5333228888923356),
    (0.32653061224489793, 1.5280492976552624),
    (0.3469387755102041, 1.5224044183631147),
    (0.3673469387755102, 1.5163817477911328),
    (0.3877551020408163, 1.5099741536220972),
    (0.40816326530612246, 1.503173819163588),
    (0.42857142857142855, 1.4959721797723178),
    (0.4489795918367347, 1.4883598495297454),
    (0.46938775510204084, 1.480326536383165),
    (0.4897959183673469, 1.4718609435473304),
    (0.5102040816326531, 1.4629506544246622),
    (0.5306122448979592, 1.4535819976075952),
    (0.5510204081632653, 1.4437398876195071),
    (0.5714285714285714, 1.4334076358530137),
    (0.5918367346938775, 1.422566724564762),
    (0.6122448979591837, 1.4111965346222244),
    (0.6326530612244898, 1.3992740147311509),
    (0.6530612244897959, 1.3867732757425564),
    (0.673469387755102, 1.373665087793775),
    (0.6938775510204082, 1.3599162496147517),
    (0.7142857142857143, 1.345488786940724),
    (0.7346938775510204, 1.3303389183276848),
    (0.7551020408163265, 1.3144156978790775),
    (0.7755102040816326, 1.2976591986232038),
    (0.7959183673469388, 1.2799980250270424),
    (0.8163265306122449, 1.2613458144728777),
    (0.8367346938775511, 1.2415961572130478),
    (0.8571428571428571, 1.2206149287366317),
    (0.8775510204081632, 1.1982281474845584),
    (0.8979591836734694, 1.1742015326790243),
    (0.9183673469387755, 1.1482031820168752),
    (0.9387755102040817, 1.1197272554022122),
    (0.9591836734693877, 1.087908607561857),
    (0.9795918367346939, 1.0509110987434778),
    (1.0, 1.0),
];

pub const ERFI: [(f64, f64); 50] = [
    (-6.0, -411275145582823.9),
    (-5.755102040816326, -24129623082740.016),
    (-5.510204081632653, -1599306070143.9277),
    (-5.26530612244898, -119774477221.16042),
    (-5.020408163265306, -10138001762.548822),
    (-4.775510204081632, -970104342.5363417),
    (-4.530612244897959, -104980669.5423176),
    (-4.285714285714286, -12852968.80097812),
    (-4.040816326530612, -1781237.66983836),
    (-3.795918367346939, -279605.41651475395),
    (-3.5510204081632653, -49755.85505879079),
    (-3.306122448979592, -10049.061654396863),
    (-3.061224489795918, -2307.373030946503),
    (-2.816326530612245, -603.7846172099531),
    (-2.5714285714285716, -180.6683719428099),
    (-2.326530612244898, -62.05646877808516),
    (-2.0816326530612246, -24.52656741799309),
    (-1.8367346938775508, -11.123208671237773),
    (-1.591836734693878, -5.720110470285238),
    (-1.3469387755102042, -3.2616093690932044),
    (-1.1020408163265305, -1.9989070710797396),
    (-0.8571428571428568, -1.2668607288751008),
    (-0.6122448979591839, -0.7878044368751053),
    (-0.36734693877551017, -0.433931374006993),
    (-0.12244897959183643, -0.13886255159170544),
    (0.12244897959183643, 0.13886255159170544),
    (0.36734693877551017, 0.433931374006993),
    (0.6122448979591839, 0.7878044368751053),
    (0.8571428571428568, 1.2668607288751008),
    (1.1020408163265305, 1.9989070710797396),
    (1.3469387755102042, 3.2616093690932044),
    (1.591836734693878, 5.720110470285238),
    (1.8367346938775508, 11.123208671237773),
    (2.0816326530612237, 24.526567417993014),
    (2.3265306122448983, 62.056468778085275),
    (2.571428571428571, 180.66837194280953),
    (2.816326530612244, 603.7846172099503),
    (3.0612244897959187, 2307.3730309465086),
    (3.3061224489795915, 10049.061654396834),
    (3.551020408163266, 49755.85505879109),
    (3.795918367346939, 279605.41651475395),
    (4.040816326530612, 1781237.66983836),
    (4.2857142857142865, 12852968.800978215),
    (4.530612244897959, 104980669.5423176),
    (4.775510204081632, 970104342.5363417),
    (5.020408163265307, 10138001762.54891),
    (5.26530612244898, 119774477221.16042),
    (5.5102040816326525, 1599306070143.9124),
    (5.755102040816327, 24129623082740.258),
    (6.0, 411275145582823.9),
];

pub const HYP2F2: [(f64, f64); 50] = [
    (0.001, 1.0003334222412732),
    (0.0012935344060815358, 1.0004313269082639),
    (0.001673231259716712, 1.0005579927049704),
    (0.002164382203774717, 1.000721877332266),
    (0.0027997028484931744, 1.0009339314420207),
    (0.003621511961330403, 1.0012083373678617),
    (0.004684550324016701, 1.0015634694021573),
    (0.00605962702113601, 1.0020231438346416),
    (0.007838336039860795, 1.0026182491557154),
    (0.010139157353988832, 1.0033888770088124),
    (0.013115348886059182, 1.0043871160228988),
    (0.0169651550318807, 1.0056807286527965),
    (0.02194501173824498, 1.0073580134285363),
    (0.028386627725283053, 1.0095342738675046),
    (0.036719079635281676, 1.012360490483399),
    (0.0474973928678847, 1.0160350562218579),
    (0.06143951187378061, 1.0208198425591548),
    (0.07947412250159028, 1.0270625065461416),
    (0.10280251184894582, 1.035227991947205),
    (0.1329785861082162, 1.045943915728097),
    (0.1720123764030538, 1.060067513478571),
    (0.2225039271491978, 1.078787097988015),
    (0.28781648525574693, 1.1037806634666465),
    (0.37230052631576777, 1.1374727010592147),
    (0.48158354019170985, 1.1834669538612317),
    (0.6229448786405269, 1.2473094476295223),
    (0.8058006336138084, 1.3379055303486327),
    (1.0423308440217631, 1.470314531971877),
    (1.3482908092621573, 1.6716642055682465),
    (1.744060551184118, 1.9947637497628867),
    (2.256002329246184, 2.552776242284138),
    (2.9182166330800245, 3.619183128895696),
    (3.7748136192884294, 5.963950452413152),
    (4.882851293094752, 12.226224727911584),
    (6.316136147397779, 34.10438071114771),
    (8.170139420154307, 144.48427420374236),
    (10.568356442452645, 1059.6638537950555),
    (13.670532674045957, 15798.33794468186),
    (17.683304363340266, 587847.3675907718),
    (22.873962607192386, 71227491.58025156),
    (29.58825763582586, 39679068568.134026),
    (38.273429267945474, 158858370175185.03),
    (49.50799759681553, 8.148635100850457e+18),
    (64.04029826768289, 1.1315474156756622e+25),
    (82.83832918497158, 1.11966814925628e+33),
    (107.15422894306899, 2.761035594639201e+43),
    (138.60768189499765, 8.570307510258866e+56),
    (179.29380547838426, 2.72099071058015e+74),
    (231.92270618358023, 1.3280760708228062e+97),
    (300.0, 3.31844401216185e+126),
];

pub const EXP_E1: [(f64, f64); 50] = [
    (1e-06, 13.23829589306249),
    (1.599858719606058e-06, 12.768381167819996),
    (2.5595479226995355e-06, 12.298466802407376),
    (4.094915062380425e-06, 11.828553012671135),
    (6.551285568595509e-06, 11.358640143934277),
    (1.0481131341546858e-05, 10.88872874866249),
    (1.676832936811008e-05, 10.418819710716862),
    (2.6826957952797257e-05, 9.948914444134994),
    (4.291934260128778e-05, 9.479015211138224),
    (6.866488450043e-05, 9.009125630861112),
    (0.00010985411419875582, 8.539251493151776),
    (0.00017575106248547917, 8.069402060294337),
    (0.00028117686979742306, 7.599592148958758),
    (0.00044984326689694455, 7.12984545943422),
    (0.000719685673001152, 6.660199897858022),
    (0.0011513953993264473, 6.190716080606625),
    (0.001842069969326716, 5.721490913460547),
    (0.0029470517025518106, 5.252679248194008),
    (0.004714866363457393, 4.784528355937837),
    (0.007543120063354617, 4.317432635355733),
    (0.012067926406393287, 3.852020006159657),
    (0.019306977288832503, 3.389287251773669),
    (0.03088843596477481, 2.9308092807556),
    (0.049417133613238344, 2.4790556788536597),
    (0.079060432109077, 2.0378519368529786),
    (0.1264855216855296, 1.6130074489041668),
    (0.2023589647725157, 1.2130615576717259),
    (0.3237457542817644, 0.8499004042496972),
    (0.5179474679231211, 0.5385735356462116),
    (0.8286427728546844, 0.2950132572582837),
    (1.3257113655901092, 0.13018125356938362),
    (2.120950887920191, 0.041411320179700534),
    (3.3932217718953286, 0.0079577990464828),
    (5.42867543932386, 0.0006962230742979746),
    (8.685113737513527, 1.7618014460885905e-05),
    (13.894954943731376, 6.226016998763288e-08),
    (22.22996482526195, 9.55754658917683e-12),
    (35.56480306223129, 9.80952391342665e-18),
    (56.89866029018297, 3.362657805336236e-27),
    (91.02981779915218, 3.179611733785855e-42),
    (145.63484775012438, 3.8492133824180694e-66),
    (232.9951810515372, 2.7687230157529137e-104),
    (372.759372031494, 3.4679485840483377e-165),
    (596.3623316594643, 1.6861395871031096e-262),
    (954.095476349994, 0.0),
    (1526.4179671752333, 0.0),
    (2442.053094548651, 0.0),
    (3906.939937054617, 0.0),
    (6250.551925273973, 0.0),
    (10000.0, 0.0),
];

pub const SCALED_E1: [(f64, f64); 50] = [
    (1e-06, 13.238309131365003),
    (1.599858719606058e-06, 12.768401595442283),
    (2.5595479226995355e-06, 12.298498280962816),
    (4.094915062380425e-06, 11.828601449690206),
    (6.551285568595509e-06, 11.358714557873284),
    (1.0481131341546858e-05, 10.888842875456737),
    (1.676832936811008e-05, 10.418994418382171),
    (2.6826957952797257e-05, 9.94918134682454),
    (4.291934260128778e-05, 9.479422052970223),
    (6.866488450043e-05, 9.009744262670903),
    (0.00010985411419875582, 8.540189616587892),
    (0.00017575106248547917, 8.070820390912962),
    (0.00028117686979742306, 7.601729278932617),
    (0.00044984326689694455, 7.1330534939104195),
    (0.000719685673001152, 6.664994873534521),
    (0.0011513953993264473, 6.197848147747096),
    (0.001842069969326716, 5.732040013158935),
    (0.0029470517025518106, 5.268181997997698),
    (0.004714866363457393, 4.807140031374178),
    (0.007543120063354617, 4.3501226855749815),
    (0.012067926406393287, 3.898787526023568),
    (0.019306977288832503, 3.4553599231304357),
    (0.03088843596477481, 3.022750038751607),
    (0.049417133613238344, 2.6046409812806113),
    (0.079060432109077, 2.2055054531205527),
    (0.1264855216855296, 1.830494115470512),
    (0.2023589647725157, 1.4851359869020198),
    (0.3237457542817644, 1.1748137759096322),
    (0.5179474679231211, 0.9040381055335266),
    (0.8286427728546844, 0.67564180952254),
    (1.3257113655901092, 0.4901145323081366),
    (2.120950887920191, 0.3453316175544825),
    (3.3932217718953286, 0.23683749523041406),
    (5.42867543932386, 0.1586325114425119),
    (8.685113737513527, 0.10419669240076015),
    (13.894954943731376, 0.06740817363154321),
    (22.22996482526195, 0.043121859500013224),
    (35.56480306223129, 0.027368163149440423),
    (56.89866029018297, 0.017276543822645516),
    (91.02981779915218, 0.010867299839311463),
    (145.63484775012438, 0.006819974294195607),
    (232.9951810515372, 0.004273669679587718),
    (372.759372031494, 0.002675537245026576),
    (596.3623316594643, 0.0016740305507250313),
    (954.095476349994, 0.0010470168885929395),
    (1526.4179671752333, 0.0006546999246849225),
    (2442.053094548651, 0.00040932396010570003),
    (3906.939937054617, 0.0002558893129252011),
    (6250.551925273973, 0.00015996028466728067),
    (10000.0, 9.999000199940023e-05),
];
