// Generated by tools/gen_filter_tables.py. Do not edit.
#pragma once

#include <array>

namespace gensample::tables {

inline constexpr int kMaxVanishingMoments = 7;

// Extremal-phase Daubechies low-pass filters, sum h = sqrt(2).
inline constexpr std::array<double, 2> kDaub1 = {
    7.07106781186547524401e-1,
    7.07106781186547524401e-1,
};
inline constexpr std::array<double, 4> kDaub2 = {
    4.82962913144534143375e-1,
    8.36516303737807905575e-1,
    2.24143868042013381026e-1,
    -1.29409522551260381174e-1,
};
inline constexpr std::array<double, 6> kDaub3 = {
    3.32670552950082615999e-1,
    8.06891509311092576494e-1,
    4.59877502118491570095e-1,
    -1.35011020010254588696e-1,
    -8.54412738820266616928e-2,
    3.52262918857095366027e-2,
};
inline constexpr std::array<double, 8> kDaub4 = {
    2.30377813308896500863e-1,
    7.14846570552915647090e-1,
    6.30880767929858907882e-1,
    -2.79837694168598542114e-2,
    -1.87034811719093084080e-1,
    3.08413818355607636272e-2,
    3.28830116668851997354e-2,
    -1.05974017850690321049e-2,
};
inline constexpr std::array<double, 10> kDaub5 = {
    1.60102397974192914481e-1,
    6.03829269797189670540e-1,
    7.24308528437772927728e-1,
    1.38428145901320731505e-1,
    -2.42294887066382031863e-1,
    -3.22448695846383746485e-2,
    7.75714938400457135231e-2,
    -6.24149021279827427419e-3,
    -1.25807519990819994685e-2,
    3.33572528547377127800e-3,
};
inline constexpr std::array<double, 12> kDaub6 = {
    1.11540743350109463621e-1,
    4.94623890398453085677e-1,
    7.51133908021095350679e-1,
    3.15250351709197629086e-1,
    -2.26264693965439820076e-1,
    -1.29766867567261935562e-1,
    9.75016055873230491023e-2,
    2.75228655303057286255e-2,
    -3.15820393174860295651e-2,
    5.53842201161496139252e-4,
    4.77725751094551063964e-3,
    -1.07730108530847956485e-3,
};
inline constexpr std::array<double, 14> kDaub7 = {
    7.78520540850091790200e-2,
    3.96539319481917306539e-1,
    7.29132090846235119917e-1,
    4.69782287405193122472e-1,
    -1.43906003928564975405e-1,
    -2.24036184993874982638e-1,
    7.13092192668302647509e-2,
    8.06126091510830719129e-2,
    -3.80299369350144135796e-2,
    -1.65745416306668806541e-2,
    1.25509985560998406130e-2,
    4.29577972921366521132e-4,
    -1.80164070404749091527e-3,
    3.53713799974520248446e-4,
};

// left edge, p = 2: 2x2 edge block, then 2x3 interior tail
inline constexpr std::array<double, 4> kLeftEdge2 = {
    7.07106781186547524401e-1, 0.0,
    -6.53378071386656983604e-1, 3.53553390593273762200e-1,
};
inline constexpr std::array<double, 6> kLeftTail2 = {
    6.64023331817192960941e-1, 2.10486961833258310627e-1, -1.21524704075338169844e-1,
    6.63608349128747487692e-1, 7.60972476391440561576e-2, -4.39347664090494345129e-2,
};
// right edge, p = 2: 2x2 edge block, then 2x3 interior tail
inline constexpr std::array<double, 4> kRightEdge2 = {
    7.07106781186547524401e-1, 0.0,
    6.29130405393115033203e-1, 3.53553390593273762200e-1,
};
inline constexpr std::array<double, 6> kRightTail2 = {
    2.85281602023768157786e-1, 4.94122229169810696527e-1, 4.17681254292085077481e-1,
    -3.39109846128690137605e-1, -5.87355482841755470166e-1, -1.38610901606616529211e-1,
};
// left edge, p = 3: 3x3 edge block, then 3x5 interior tail
inline constexpr std::array<double, 9> kLeftEdge3 = {
    7.07106781186547524401e-1, 0.0, 0.0,
    -6.54624842956870038058e-1, 3.53553390593273762200e-1, 0.0,
    -2.51545250915841307081e-1, -7.31462603279294266765e-1, 1.76776695296636881100e-1,
};
inline constexpr std::array<double, 15> kLeftTail3 = {
    6.16064211078297142034e-1, 3.26226201876537047966e-1, -8.69370814215007774971e-2, -7.44403990855927003316e-2, 3.06907786732965541141e-2,
    5.12296405309818188877e-1, 4.03134009933224458420e-1, -1.39477915564710308770e-1, -4.18342658339333938506e-2, 1.72477070171644817380e-2,
    4.86778054309480496782e-1, -3.37212506481986834065e-1, 1.40589169390797747722e-1, -2.44313591903421915243e-3, 1.00727218930738191337e-3,
};
// right edge, p = 3: 3x3 edge block, then 3x5 interior tail
inline constexpr std::array<double, 9> kRightEdge3 = {
    7.07106781186547524401e-1, 0.0, 0.0,
    6.17755778466028853903e-1, 3.53553390593273762200e-1, 0.0,
    -2.21849059841323025859e-2, 7.10814444920892783208e-1, 1.76776695296636881100e-1,
};
inline constexpr std::array<double, 15> kRightTail3 = {
    1.53734338621828824269e-1, 3.72882214621873540295e-1, 3.66253790699252102049e-1, 3.10490669341190374553e-1, 3.26769509283965977060e-1,
    -2.13082384721452064305e-1, -5.16830736868069556077e-1, -3.92476091365416825225e-1, -1.51015251841330812105e-1, -6.33766229731628779826e-2,
    1.73913104009214380000e-1, 4.21825754454523225450e-1, 1.37610239211076669960e-1, -3.19931611907687667157e-1, -3.65410872494853019205e-1,
};
// left edge, p = 4: 4x4 edge block, then 4x7 interior tail
inline constexpr std::array<double, 16> kLeftEdge4 = {
    7.07106781186547524401e-1, 0.0, 0.0, 0.0,
    -6.43906962319214162742e-1, 3.53553390593273762200e-1, 0.0, 0.0,
    -2.05473678883830146679e-1, -8.89319404455609021903e-1, 1.76776695296636881100e-1, 0.0,
    -2.06122906547231175972e-1, -2.18815621316127717103e-1, -1.30633772030182764194e-1, 8.83883476483184405501e-2,
};
inline constexpr std::array<double, 28> kLeftTail4 = {
    5.76315135292711851233e-1, 3.88549688576498532159e-1, -6.30818127402282903676e-3, -1.25638754805358957518e-1, 1.64995053251853344528e-2, 2.68007291428211554096e-2, -8.63722878355770098230e-3,
    4.01995345949577442911e-1, 5.21936693710163955710e-1, -2.41928724990733282906e-2, -1.55810830945103281675e-1, 3.33173082126070477028e-2, 1.88757758027383079344e-2, -6.08320740852170743315e-3,
    4.27768114176835078213e-2, 3.26509791454474308918e-1, -1.54078277580973627932e-1, 5.52537411629191858422e-2, -2.00724374912493064892e-2, 2.53083123079998839844e-3, -8.15625882284910685997e-4,
    6.63526178318814787873e-1, -6.20238729610166973560e-1, 2.40003299449599747109e-1, -4.46770850963722203197e-2, 1.39429733136297864290e-2, 5.08708998829749497378e-4, -1.63944644331591489811e-4,
};
// right edge, p = 4: 4x4 edge block, then 4x7 interior tail
inline constexpr std::array<double, 16> kRightEdge4 = {
    7.07106781186547524401e-1, 0.0, 0.0, 0.0,
    6.15068626846466401403e-1, 3.53553390593273762200e-1, 0.0, 0.0,
    -1.07677286715253013101e-2, 6.97173552151544379405e-1, 1.76776695296636881100e-1, 0.0,
    -2.40077475419615906444e-1, 3.94985634983832215193e-1, 5.45941050666426621145e-1, 8.83883476483184405501e-2,
};
inline constexpr std::array<double, 28> kRightTail4 = {
    9.03991237310505363846e-2, 2.80502287316548114766e-1, 3.37953642026450667220e-1, 2.69521593483049469761e-1, 2.64562099482648300708e-1, 2.81623600410475091193e-1, 2.77465231939846342815e-1,
    -1.33625212406094026226e-1, -4.14629878875634233892e-1, -4.51027346660096973305e-1, -2.47827677681021681522e-1, -1.61132019217203580652e-1, -1.21039945605672356309e-1, -3.81906940621974338317e-2,
    1.25086464279165202393e-1, 3.88134728463012066390e-1, 3.32589878719659130208e-1, -4.60825283941624774258e-2, -2.14402149308763914691e-1, -2.47622080621336962721e-1, -3.10263275179840617027e-1,
    -9.02872362403409332281e-2, -2.80155108098754739059e-1, -1.45317714028120407369e-1, 3.27250165025104445047e-1, 4.38701832021521068207e-1, 2.43217262431930479633e-1, 1.18416683135521873993e-1,
};
// left edge, p = 5: 5x5 edge block, then 5x9 interior tail
inline constexpr std::array<double, 25> kLeftEdge5 = {
    7.07106781186547524401e-1, 0.0, 0.0, 0.0, 0.0,
    -6.36283894934001363628e-1, 3.53553390593273762200e-1, 0.0, 0.0, 0.0,
    -1.36872826993447340738e-1, -8.34649664580953026207e-1, 1.76776695296636881100e-1, 0.0, 0.0,
    -1.66020120724431111258e-1, -2.67583433895840612358e-1, -5.47639018515850326322e-1, 8.83883476483184405501e-2, 0.0,
    -2.11340874999361196045e-1, -3.23296484183342885560e-1, 8.04206082312589933713e-2, -2.18291301343594522565e-2, 4.41941738241592202751e-2,
};
inline constexpr std::array<double, 45> kLeftTail5 = {
    5.43300481967341370327e-1, 4.20286939603139043045e-1, 7.93525436428005194077e-2, -1.36230382905016745440e-1, -2.70077408107461883430e-2, 4.99351757118778941689e-2, -2.23262388015864422859e-3, -9.66633160149204327588e-3, 2.56298087294177649807e-3,
    3.26492651743807703729e-1, 5.51751196771812370655e-1, 1.22905320140143420214e-1, -1.98898119264590406369e-1, -2.26835505942635214789e-2, 6.17576322845627205539e-2, -7.42434280553267751766e-3, -7.85990459711072562257e-3, 2.08401552688638245243e-3,
    -1.99632583549410314590e-1, 4.39835256563866117711e-1, 3.72150843415753304679e-2, -1.33051910829171528204e-1, 3.11091939393214452966e-2, 2.67110075315320317696e-3, 1.27209227561034814724e-3, -1.73904527177487070482e-3, 4.61099406940565416060e-4,
    3.75657700067740976056e-1, 1.53329967367589405019e-2, -4.86822031468784480039e-1, 4.38895757360418204417e-1, -1.46301475602113951840e-1, 2.61988320221291978789e-2, -6.77656706028542663750e-3, -1.49222728770759194258e-4, 3.95656817306578472182e-5,
    5.91197389666473308832e-1, -5.44677862351497114951e-1, 3.81936756710065387486e-1, -2.13202292539889686272e-1, 6.57730572839288837645e-2, -8.17233982355967360389e-3, 2.27696174111335734919e-3, -9.66906069840941173779e-5, 2.56370447973367882419e-5,
};
// right edge, p = 5: 5x5 edge block, then 5x9 interior tail
inline constexpr std::array<double, 25> kRightEdge5 = {
    7.07106781186547524401e-1, 0.0, 0.0, 0.0, 0.0,
    6.13993785982513371141e-1, 3.53553390593273762200e-1, 0.0, 0.0, 0.0,
    -6.39606324162393721856e-3, 6.92066260486821947485e-1, 1.76776695296636881100e-1, 0.0, 0.0,
    -2.37562961995444552563e-1, 3.99268886022056126782e-1, 5.36149973828753431865e-1, 8.83883476483184405501e-2, 0.0,
    2.33426949285316446143e-2, -1.88980485153392626031e-1, 6.04745718058923647543e-1, 3.67499316312675794646e-1, 4.41941738241592202751e-2,
};
inline constexpr std::array<double, 45> kRightTail5 = {
    5.55519705116879506273e-2, 2.09515324032026854078e-1, 3.06870917149982928786e-1, 2.57546811232720495283e-1, 2.22799981350420184680e-1, 2.46358558795628385814e-1, 2.49715564082943752077e-1, 2.44192900537928535421e-1, 2.45350323006538908849e-1,
    -8.50780838663861268996e-2, -3.20873627795786116074e-1, -4.46716450291388253645e-1, -3.06717231286956802626e-1, -1.89485196528035705807e-1, -1.81756422347039369981e-1, -1.37427873665971872252e-1, -7.52978902885072346990e-2, -2.61952088456282619754e-2,
    8.56983027662707035269e-2, 3.23212795292153580135e-1, 4.03491086627557950731e-1, 1.33645726155506449612e-1, -9.03519851993253685793e-2, -1.24632189129254570484e-1, -1.85480422481972925320e-1, -2.52772192575527813546e-1, -2.74377480791605980729e-1,
    -6.95116847470178554657e-2, -2.62164654460265762639e-1, -2.71493897457575372680e-1, 1.01995721444077962139e-1, 3.67298849198543936455e-1, 3.06349365398981830327e-1, 2.44455527582872791714e-1, 1.92377698634696563422e-1, 7.53564542100155926659e-2,
    4.71307682208306556155e-2, 1.77754597806536883042e-1, 1.34643840064803828926e-1, -2.55605507408844549385e-1, -4.56707162325795611346e-1, -1.90178922540460452630e-1, 5.11245345827827664517e-2, 1.56407674060139271500e-1, 2.68155850476277776587e-1,
};
// left edge, p = 6: 6x6 edge block, then 6x11 interior tail
inline constexpr std::array<double, 36> kLeftEdge6 = {
    7.07106781186547524401e-1, 0.0, 0.0, 0.0, 0.0, 0.0,
    -6.31056000351277952703e-1, 3.53553390593273762200e-1, 0.0, 0.0, 0.0, 0.0,
    -9.74174220308592955829e-2, -7.94028558614502285011e-1, 1.76776695296636881100e-1, 0.0, 0.0, 0.0,
    7.05292680488193565910e-2, 2.46595067648343224468e-2, -8.04322448762587470073e-1, 8.83883476483184405501e-2, 0.0, 0.0,
    -2.55773230398239670856e-1, -4.23589548086819533882e-1, -1.56750288702935200487e-1, -5.05364576213477694466e-2, 4.41941738241592202751e-2, 0.0,
    -1.27789385938759617678e-1, -2.47802772203317445283e-1, -4.44925798957232884203e-1, 5.12499566450129064203e-2, -1.15957474663251836207e-2, 2.20970869120796101375e-2,
};
inline constexpr std::array<double, 66> kLeftTail6 = {
    5.15414575196262633429e-1, 4.34111826615061855854e-1, 1.54880114016509565972e-1, -1.13394397930768852659e-1, -7.49078479006624719652e-2, 5.15313590057114984975e-2, 1.96800371278150668489e-2, -1.95381738594892542591e-2, -3.81552469278539488874e-4, 3.48217301278792940762e-3, -7.85251529211761240353e-4,
    2.72439418103717969090e-1, 5.41926343317422415165e-1, 2.48886871862263089612e-1, -1.70928886386464163245e-1, -1.03355408749283407258e-1, 7.75502214869239652550e-2, 1.99729502461906781168e-2, -2.43425390383234527929e-2, 1.18193070193112790295e-3, 3.13299852929515037498e-3, -7.06510525787319885977e-4,
    -3.07461351045833965803e-1, 3.80714686284609135604e-1, 2.32601077291158885300e-1, -1.72814643229952021919e-1, -4.69310486984114034534e-2, 5.55218136978753012705e-2, -2.37869220186356166745e-3, -6.50931486546849385428e-3, 1.81688520032001635564e-4, 9.35508976109730946279e-4, -2.10963054214628220244e-4,
    -3.09950882854508354981e-1, 3.80686918096516802775e-1, -2.41633491431240354276e-1, 7.65627556278220402348e-3, 1.56136850388017128565e-1, -1.20578416568284575018e-1, 3.57175908964711307337e-2, -6.13962550987470173349e-3, 1.29258305875545336807e-3, 6.68721414415429911561e-5, -1.50800810688595349431e-5,
    5.45811304435147520078e-1, 2.50451892750696437890e-4, -4.66862054701414170680e-1, 4.08183858937153256376e-1, -1.94030634834051439445e-1, 7.49393689002006840829e-2, -1.80376698577667091158e-2, 8.60489193186335054546e-4, -2.42242597939946310316e-4, 3.50556828805621318816e-5, -7.90527308333959834563e-6,
    3.71488635217768174185e-1, -4.38786843156024309458e-1, 4.55256397844977242589e-1, -3.52244176284621827601e-1, 2.18120539578538995756e-1, -1.03967663836823146809e-1, 2.80332855301666709901e-2, -3.32966930098683058581e-3, 7.39991840096287099266e-4, 7.90559726929520501303e-6, -1.78276102946308565855e-6,
};
// right edge, p = 6: 6x6 edge block, then 6x11 interior tail
inline constexpr std::array<double, 36> kRightEdge6 = {
    7.07106781186547524401e-1, 0.0, 0.0, 0.0, 0.0, 0.0,
    6.13455042129552349455e-1, 3.53553390593273762200e-1, 0.0, 0.0, 0.0, 0.0,
    -4.24469182814916137932e-3, 6.89566061238900709948e-1, 1.76776695296636881100e-1, 0.0, 0.0, 0.0,
    -2.36327953525640365948e-1, 4.01281393397172592584e-1, 5.31568826966752559356e-1, 8.83883476483184405501e-2, 0.0, 0.0,
    1.50332667167944867753e-2, -1.76306937012757267406e-1, 6.00601832883162973474e-1, 3.61486681415246099672e-1, 4.41941738241592202751e-2, 0.0,
    1.49403847747072845067e-1, -2.44958535292326236206e-1, 1.28366828876239342393e-1, 6.05687488486508460041e-1, 2.30881669396586779210e-1, 2.20970869120796101375e-2,
};
inline constexpr std::array<double, 66> kRightTail6 = {
    3.50662752660915896746e-2, 1.55500286020644053200e-1, 2.71208402252705419154e-1, 2.54608963968647548623e-1, 2.00075112270177265027e-1, 2.13812744023717493559e-1, 2.30727751276528377276e-1, 2.22465406269009741772e-1, 2.20798962468878695897e-1, 2.22639523658732947658e-1, 2.22300840812740875568e-1,
    -5.49246542847006880623e-2, -2.43561638242050129350e-1, -4.12759545712369723776e-1, -3.45419463293358411499e-1, -2.08247684408072719033e-1, -1.94122783880934105448e-1, -1.87581368202209332800e-1, -1.34282102205236915991e-1, -9.28301247838936149845e-2, -5.81912760766286175777e-2, -1.93910078317775649164e-2,
    5.79225474807035410604e-2, 2.56855700582585249867e-1, 4.10033451507348584502e-1, 2.52279278602579735002e-1, 8.34188599829303694357e-3, -4.93567232983539070511e-2, -7.62201920556821083139e-2, -1.57552729157372816666e-1, -2.07858547892177250380e-1, -2.32340799491658122559e-1, -2.48602122283967346805e-1,
    -5.04558252764321327682e-2, -2.23744757672613934495e-1, -3.24468426020959509774e-1, -7.47150984828995354602e-2, 2.46416942172801989144e-1, 2.83644517804382988259e-1, 2.38402954706796208932e-1, 2.52593404259044981290e-1, 2.14841530435287512897e-1, 1.35853176223283159310e-1, 5.33565771817889128412e-2,
    3.78205827876578071933e-2, 1.67714175409874726244e-1, 2.10939174960364716691e-1, -8.71188081799138462287e-2, -4.07839611555666531336e-1, -3.29482629053512301588e-1, -1.21465782295570936452e-1, -3.19361419095796011984e-2, 7.60444130848699374688e-2, 1.90969958277188411865e-1, 2.46536024154422519129e-1,
    -2.46851009099966324854e-2, -1.09465297435360389382e-1, -1.11790797912773513106e-1, 1.71656651749203788893e-1, 4.17598938934857379943e-1, 1.86571896042324723173e-1, -1.66717920166890139754e-1, -2.47575114572601979038e-1, -2.50242707730045849739e-1, -2.29800564160580088722e-1, -1.10781986969916852474e-1,
};
// left edge, p = 7: 7x7 edge block, then 7x13 interior tail
inline constexpr std::array<double, 49> kLeftEdge7 = {
    7.07106781186547524401e-1, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    -6.27366984149022489111e-1, 3.53553390593273762200e-1, 0.0, 0.0, 0.0, 0.0, 0.0,
    -7.33671071685647306868e-2, -7.67839888422430443427e-1, 1.76776695296636881100e-1, 0.0, 0.0, 0.0, 0.0,
    1.82460871827484729936e-1, 2.08557623922826064177e-1, -7.48943751049003363538e-1, 8.83883476483184405501e-2, 0.0, 0.0, 0.0,
    -1.23674400033620201976e-1, -2.45124372004136091710e-1, -2.07371583995832719676e-1, -1.80106707188104540293e-1, 4.41941738241592202751e-2, 0.0, 0.0,
    -1.65519437556533397264e-1, -3.32352036423581050411e-1, -5.32719401802885002720e-1, 1.09778166503173719434e-1, -2.36412551611811711265e-2, 2.20970869120796101375e-2, 0.0,
    -1.48422820626306846271e-1, -2.56934085930090307625e-1, -2.71552753736361179597e-1, -1.26648470229498166727e-1, 2.96662175842923058110e-2, -5.65816498239112199531e-3, 1.10485434560398050688e-2,
};
inline constexpr std::array<double, 91> kLeftTail7 = {
    4.91475094924937331251e-1, 4.37363966748050360648e-1, 2.15860145572004916168e-1, -6.94198360605556729622e-2, -1.10662383188201545117e-1, 3.06021391528329594051e-2, 4.50541340565072095114e-2, -1.89613868105004644101e-2, -1.09757199751474437643e-2, 7.47134918131380121956e-3, 5.44427530155967767955e-4, -1.25223171323083492908e-3, 2.45849040122378779838e-4,
    2.32130355173339635282e-1, 5.14663159587709443685e-1, 3.42040345651168340699e-1, -9.86074343777250784035e-2, -1.68377541289515013894e-1, 5.19824153072170229706e-2, 6.15391893908044373050e-2, -2.92781671262623804294e-2, -1.20349731559452892563e-2, 9.44129609423271215474e-3, 9.85686364929844037918e-5, -1.21543448260016274039e-3, 2.38624687205799259115e-4,
    -3.59382027042753691797e-1, 2.85119832994520709234e-1, 3.54544938832064179592e-1, -1.03835672745990581801e-1, -1.45702919957167781549e-1, 6.27236164317088935892e-2, 3.40045383373497944334e-2, -2.26783423561358895352e-2, -2.68751058252713374922e-3, 3.84885469247955042284e-3, -4.14930889124406937374e-5, -4.44634089559518696801e-4, 8.72944383766336273373e-5,
    -5.09883427089312619580e-1, 1.81852354282712655940e-1, 1.77559114907544151516e-1, -1.59520634193480457420e-1, 5.36370975599315292107e-2, 1.03879916376287841048e-2, -3.18460128266652035016e-2, 2.04324887090598918222e-2, -6.22831118939863411007e-3, 1.31033405625210671513e-3, -1.73595756709738866879e-4, -5.20876698382004993256e-5, 1.02263051611218738872e-5,
    6.55695410572713210282e-2, 5.33164691973329503938e-1, -6.50144115199878202205e-1, 1.29499285907696340517e-1, 2.45396384278718891689e-1, -2.17441762456261724869e-1, 1.01342162557324035824e-1, -3.70155189085829585956e-2, 7.86914262003343154020e-3, -3.88566956339024145767e-4, 9.28061072073207615607e-5, -1.02850234054142058237e-5, 2.01924540413805152483e-6,
    3.87026518255834094896e-1, -2.06666127079294183468e-1, -3.99290467753172874144e-2, 3.27450754983460719733e-1, -4.17229892488073212122e-1, 2.72664615105109052733e-1, -1.17309662588616530731e-1, 4.07806856757872836904e-2, -9.28751577973696317667e-3, 7.91403398808450325278e-4, -1.47931618187706199855e-4, -4.63444093147217241396e-6, 9.09873821648107343551e-7,
    3.90849656000942477234e-1, -2.73882458694947021712e-1, 2.68722737146644524356e-1, -4.46426822296198984201e-1, 4.78224385467044132369e-1, -2.84570313817680705656e-1, 1.05589705230169317036e-1, -3.13735290835307262206e-2, 6.65988809835484328949e-3, -3.13750823082535417463e-4, 6.42565847800634986754e-5, -1.65507268290474824285e-6, 3.24938289076772036288e-7,
};
// right edge, p = 7: 7x7 edge block, then 7x13 interior tail
inline constexpr std::array<double, 49> kRightEdge7 = {
    7.07106781186547524401e-1, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    6.13146543342576708281e-1, 3.53553390593273762200e-1, 0.0, 0.0, 0.0, 0.0, 0.0,
    -3.02452332350666368415e-3, 6.88151289049979568940e-1, 1.76776695296636881100e-1, 0.0, 0.0, 0.0, 0.0,
    -2.35623108693435576097e-1, 4.02392037761643584744e-1, 5.29030856088356726405e-1, 8.83883476483184405501e-2, 0.0, 0.0, 0.0,
    1.05391843589613231628e-2, -1.69410236126587886258e-1, 5.98338214224930353746e-1, 3.58264573679181238620e-1, 4.41941738241592202751e-2, 0.0, 0.0,
    1.48834704753754971530e-1, -2.48088922409659929647e-1, 1.39434081855911562193e-1, 5.98306984068500919918e-1, 2.27445833182435959507e-1, 2.20970869120796101375e-2, 0.0,
    -2.35807897737702470477e-2, 1.07070696332765106252e-1, -2.96867287748499209782e-1, 4.06898556137875524699e-1, 5.04240468148996950676e-1, 1.38975499241637564783e-1, 1.10485434560398050688e-2,
};
inline constexpr std::array<double, 91> kRightTail7 = {
    2.25397742160323635831e-2, 1.14806305805906544412e-1, 2.33638542186783711341e-1, 2.50817960389124582965e-1, 1.91974788095728909855e-1, 1.85954867368235991138e-1, 2.12620276781754367882e-1, 2.09293879171914883837e-1, 2.01609826228591244277e-1, 2.04495207762660489006e-1, 2.05243598991109938684e-1, 2.04619579439575471003e-1, 2.04721986874834853478e-1,
    -3.58567094308568393145e-2, -1.82636095138184446250e-1, -3.65119764184872875082e-1, -3.65608232396058581272e-1, -2.30873415018122829380e-1, -1.89458330500273369972e-1, -2.07870050196961783508e-1, -1.72491105188831631909e-1, -1.28501908538207873866e-1, -1.03972450975129039857e-1, -7.56330865766544712682e-2, -4.46814311308027454056e-2, -1.50967117396526313689e-2,
    3.90236592109962006602e-2, 1.98766949043189949814e-1, 3.83148396987186267004e-1, 3.25472046174820175864e-1, 9.39392586175760218464e-2, -2.62199744091314863072e-3, -3.45773442202459095862e-3, -6.88252353465649320575e-2, -1.38691028814204598815e-1, -1.70471100998938211488e-1, -1.97678392327524967291e-1, -2.19219995051055835861e-1, -2.28938165825474349481e-1,
    -3.56785472457722340062e-2, -1.81728626318495789001e-1, -3.30924816899544138362e-1, -1.98860237371675792984e-1, 1.18845488574362728771e-1, 2.37644565671860261217e-1, 2.00730093052678327628e-1, 2.28116498730685937375e-1, 2.51828932930614006039e-1, 2.13087877092499693876e-1, 1.63243114488626064970e-1, 1.07208939738652048507e-1, 4.03255264922720262657e-2,
    2.85921347220725800673e-2, 1.45633994869881446938e-1, 2.44672411139893142488e-1, 5.48205276448971479479e-2, -2.97822713799544825483e-1, -3.67043928526129033276e-1, -2.09811687686914068999e-1, -1.34788260367546101842e-1, -8.04963315755683620254e-2, 3.30746971804453068342e-2, 1.28003364347536921812e-1, 1.90292112681284057656e-1, 2.28471489052180684587e-1,
    -2.03709721222415930561e-2, -1.03759515628428748220e-1, -1.56255269730470860941e-1, 5.29608681385372107599e-2, 3.74573088280404825636e-1, 3.35813215122855358087e-1, 2.72382418287121102014e-2, -1.24573223502091348758e-1, -1.67641820360430095753e-1, -2.36649558097309210283e-1, -2.40794449982013676446e-1, -1.74353733811348682585e-1, -8.02597873339838137354e-2,
    1.29591093959174415966e-2, 6.60072040660302236740e-2, 8.58145065113639250950e-2, -1.02902675302439915806e-1, -3.45999281657917163252e-1, -1.96051579796992500582e-1, 2.08773983207987929180e-1, 3.27469015688899043670e-1, 2.15458364365822798730e-1, 1.36185531289269517103e-1, 1.96512474056793589063e-2, -1.28508136811507475198e-1, -2.17409581599860285826e-1,
};

}  // namespace gensample::tables
