#pragma once

// Taylor coefficients in h = lambda - 1 of the signed eta map and of the
// uniform-expansion coefficients c_0..c_3. Generated offline in exact
// rational arithmetic; truncation error below 1e-22 for |h| <= 0.6.

#include <array>

namespace mlcp::specfun::detail {

inline constexpr std::array<double, 90> k_eta_taylor = {
    0.0,
    1.0,
    -3.3333333333333333333e-1,
    1.9444444444444444444e-1,
    -1.3518518518518518519e-1,
    1.0270061728395061728e-1,
    -8.2337595532039976484e-2,
    6.8447053203997648442e-2,
    -5.8401736723495982755e-2,
    5.081907369643673656e-2,
    -4.4904356975575039704e-2,
    4.0169383760970957943e-2,
    -3.6298233508214943597e-2,
    3.3077734575438016107e-2,
    -3.0359007414019896477e-2,
    2.8035031162601392964e-2,
    -2.602696448559754601e-2,
    2.4275486092980206049e-2,
    -2.2735134066871808555e-2,
    2.1370501031151916374e-2,
    -2.0153613610726465333e-2,
    1.9062088270322539063e-2,
    -1.8077808406716769774e-2,
    1.7185958929723513137e-2,
    -1.6374310744519389579e-2,
    1.5632682964135628239e-2,
    -1.495253351659711861e-2,
    1.4326643838156491736e-2,
    -1.3748873417603917944e-2,
    1.321396682499628316e-2,
    -1.271740061457630188e-2,
    1.2255260833079213382e-2,
    -1.1824144243300929939e-2,
    1.1421078087041096682e-2,
    -1.1043454461119611371e-2,
    1.0688976300788524312e-2,
    -1.0355612649903018843e-2,
    1.0041561411729071716e-2,
    -9.7452181640939529651e-3,
    9.4651499203828757703e-3,
    -9.200072947146721542e-3,
    8.9488339268797852848e-3,
    -8.710393893363279589e-3,
    8.4838144760978181704e-3,
    -8.2682460766576371177e-3,
    8.0629176684654544117e-3,
    -7.8671279664232315143e-3,
    7.6802377570210308425e-3,
    -7.5016632152681758634e-3,
    7.3308700638101024104e-3,
    -7.1673684532778685392e-3,
    7.0107084623321558199e-3,
    -6.8604761318468043283e-3,
    6.7162899608886313849e-3,
    -6.5777978031137253365e-3,
    6.4446741113322764603e-3,
    -6.3166174856276800358e-3,
    6.1933484868190076006e-3,
    -6.0746076824451660847e-3,
    5.9601538969993070816e-3,
    -5.8497626419957872795e-3,
    5.7432247047255491921e-3,
    -5.6403448773445209961e-3,
    5.5409408103219224009e-3,
    -5.4448419763158986547e-3,
    5.3518887322962391846e-3,
    -5.2619314692425441445e-3,
    5.1748298400481277569e-3,
    -5.090452057386143069e-3,
    5.0086742542708117112e-3,
    -4.9293799008950332575e-3,
    4.8524592720643879483e-3,
    -4.7778089601921383378e-3,
    4.7053314293834089233e-3,
    -4.6349346066304228043e-3,
    4.5665315065739839526e-3,
    -4.5000398866674004434e-3,
    4.4353819299146612314e-3,
    -4.3724839526508289385e-3,
    4.3112761350943777069e-3,
    -4.2516922726329619836e-3,
    4.1936695460096190502e-3,
    -4.137148308758941128e-3,
    4.0820718904051194195e-3,
    -4.0283864140784049966e-3,
    3.9760406273355713371e-3,
    -3.9249857450852461757e-3,
    3.8751753036221146902e-3,
    -3.8265650248663861406e-3,
    3.7791126899877898351e-3,
};

inline constexpr std::array<double, 90> k_c0_taylor = {
    -3.3333333333333333333e-1,
    8.3333333333333333333e-2,
    -4.2592592592592592593e-2,
    2.7237654320987654321e-2,
    -1.9477513227513227513e-2,
    1.4896200764256319812e-2,
    -1.1915478640015677053e-2,
    9.8422305200372330002e-3,
    -8.3280935121802320019e-3,
    7.1803483850698596722e-3,
    -6.2844192721012141982e-3,
    5.5682526178851137807e-3,
    -4.9844456844156587152e-3,
    4.500636357257656208e-3,
    -4.094035669460158313e-3,
    3.7481681888972333191e-3,
    -3.4508503769709488377e-3,
    3.1928936118061428903e-3,
    -2.9672473773571044456e-3,
    2.7684185377559863328e-3,
    -2.5920687290043852913e-3,
    2.4347295641281328842e-3,
    -2.2935975151754522667e-3,
    2.1663837650746439193e-3,
    -2.0512026718656221085e-3,
    1.9464878012998069932e-3,
    -1.8509279373155744373e-3,
    1.7634177680174907944e-3,
    -1.6830194876031552229e-3,
    1.608932611833441557e-3,
    -1.5404700398258567986e-3,
    1.4770389132735675312e-3,
    -1.4181251942894038926e-3,
    1.3632811504684356933e-3,
    -1.3121151310896725985e-3,
    1.264283162533024843e-3,
    -1.2194819984054408207e-3,
    1.1774433406380576341e-3,
    -1.137929009063293359e-3,
    1.1007268837976650039e-3,
    -1.0656474808134539411e-3,
    1.0325210490515614097e-3,
    -1.0011950992701481487e-3,
    9.7153229199058465258e-4,
    -9.4340862547679886927e-4,
    9.1671187548020006067e-4,
    -8.9134024711600815229e-4,
    8.6720120617742333192e-4,
    -8.4421046280159115174e-4,
    8.2229108495348014301e-4,
    -8.013727229061217439e-4,
    7.8139092893636167102e-4,
    -7.6228655895629522966e-4,
    7.440052448659628534e-4,
    -7.2649692812512331171e-4,
    7.0971544646664877503e-4,
    -6.9361816686380031776e-4,
    6.7816565886051509948e-4,
    -6.6332140321188104586e-4,
    6.4905153148873605293e-4,
    -6.3532459289819895672e-4,
    6.2211134507919050166e-4,
    -6.0938456606359735515e-4,
    5.9711888496196690543e-4,
    -5.8529062924763345752e-4,
    5.7387768678335382475e-4,
    -5.6285938096683102158e-4,
    5.5221635757172062294e-4,
    -5.4193048203368004401e-4,
    5.3198474608078369874e-4,
    -5.223631827375840076e-4,
    5.1305078884510892176e-4,
    -5.0403345433756387617e-4,
    4.9529789760249107583e-4,
    -4.8683160632636274915e-4,
    4.7862278329351888204e-4,
    -4.7066029666425760838e-4,
    4.6293363430881836116e-4,
    -4.5543286181888015944e-4,
    4.4814858385781562306e-4,
    -4.4107190854597057054e-4,
    4.341944146082606709e-4,
    -4.2750812103889210588e-4,
    4.2100545906245606329e-4,
    -4.1467924619239253886e-4,
    4.0852266220719306586e-4,
    -4.025292268819976761e-4,
    3.9669277932868504576e-4,
    -3.9100745881137128802e-4,
    3.8546768691660992387e-4,
};

inline constexpr std::array<double, 90> k_c1_taylor = {
    -1.8518518518518518519e-3,
    -3.4722222222222222222e-3,
    3.8029100529100529101e-3,
    -3.4290490887713109935e-3,
    2.9881319811875367431e-3,
    -2.5972581998334313149e-3,
    2.2708655428187749861e-3,
    -2.0016126318131189653e-3,
    1.7789427446165950681e-3,
    -1.5934139242758903939e-3,
    1.4374305837483470049e-3,
    -1.3050755686383738793e-3,
    1.1917732719073143213e-3,
    -1.0939765389837165966e-3,
    1.0089168019233183831e-3,
    -9.344146308307522671e-4,
    8.6873860827654911526e-4,
    -8.1050057506413969695e-4,
    7.5857763727603449692e-4,
    -7.1205373339691525774e-4,
    6.701755128308407008e-4,
    -6.3231873714313972291e-4,
    5.9796247194187954201e-4,
    -5.6666909227975577354e-4,
    5.3806866229023945873e-4,
    -5.1184663373268392147e-4,
    4.8773408358390520692e-4,
    -4.6549990971854108803e-4,
    4.4494454839410119717e-4,
    -4.2589488329511049043e-4,
    4.0820009421966890399e-4,
    -3.9172825180254668391e-4,
    3.7636350840950953088e-4,
    -3.6200376839299884376e-4,
    3.4855874605999995995e-4,
    -3.3594833898773708239e-4,
    3.2410125920298481961e-4,
    -3.1295387629621248828e-4,
    3.0244923557077750904e-4,
    -2.9253622142413984645e-4,
    2.8316884176779555489e-4,
    -2.7430561375108218246e-4,
    2.6590903461598981301e-4,
    -2.5794512437014751777e-4,
    2.50383029272627725e-4,
    -2.4319467699747840489e-4,
    2.3635447586252131707e-4,
    -2.2983905175584827605e-4,
    2.2362701741443981234e-4,
    -2.1769876955164197311e-4,
    2.1203631002709327963e-4,
    -2.0662308783132071185e-4,
    2.014438591393723981e-4,
    -1.9648456309097620584e-4,
    1.9173221129286483189e-4,
    -1.8717478932345712405e-4,
    1.8280116876026001059e-4,
    -1.7860102845367353697e-4,
    1.7456478394348971949e-4,
    -1.706835240613168023e-4,
    1.6694895388758458152e-4,
    -1.633533433391209775e-4,
    1.5988948075537376049e-4,
    -1.565506309305426727e-4,
    1.5333049710715118455e-4,
    -1.5022318650556568747e-4,
    1.4722317901503874429e-4,
    -1.4432529871616777966e-4,
    1.415246879431946807e-4,
    -1.388167836281470875e-4,
    1.3619729569813436025e-4,
    -1.3366218732275054908e-4,
    1.312076568310050984e-4,
    -1.2883012113692728397e-4,
    1.2652620053033791634e-4,
    -1.242927047045644274e-4,
    1.2212661990636137262e-4,
    -1.2002509710521821503e-4,
    1.1798544108978857871e-4,
    -1.160051004085312997e-4,
    1.1408165807996166074e-4,
    -1.1221282300529942905e-4,
    1.1039642202287998888e-4,
    -1.08630392549562666e-4,
    1.0691277575961045384e-4,
    -1.0524171025620116374e-4,
    1.0361542619492563497e-4,
    -1.0203223982239012189e-4,
    1.0049054839641644865e-4,
    -9.8988825457368083155e-5,
};

inline constexpr std::array<double, 90> k_c2_taylor = {
    4.1335978835978835979e-3,
    -2.6813271604938271605e-3,
    1.6653806584362139918e-3,
    -1.0337630744170096022e-3,
    6.389022577454933422e-4,
    -3.8609516577918284023e-4,
    2.2025353424092778802e-4,
    -1.0918336155025300044e-4,
    3.3580519000456504029e-5,
    1.8474582461357377469e-5,
    -5.4551992134340816445e-5,
    7.9584256099456099539e-5,
    -9.6859779861858392847e-5,
    1.0861576446517335666e-4,
    -1.1640173003649816231e-4,
    1.2130795633441099602e-4,
    -1.2411230512175390369e-4,
    1.2537653642723104736e-4,
    -1.2551067792457588109e-4,
    1.2481677661087983488e-4,
    -1.2351909728458425694e-4,
    1.2178526028696713272e-4,
    -1.1974122746863578207e-4,
    1.1748205164864897264e-4,
    -1.1507967013556265682e-4,
    1.1258861078092600306e-4,
    -1.1005020736577585629e-4,
    1.0749573947662929819e-4,
    -1.0494878896813710282e-4,
    1.0242702071111991829e-4,
    -9.994353677464221311e-5,
    9.7507912135343144049e-5,
    -9.512699092896320589e-5,
    9.2805501469200754506e-5,
    -9.054653326334437795e-5,
    8.8351908347591439653e-5,
    -8.6222471270316722484e-5,
    8.4158316148091332048e-5,
    -8.2158964829631816251e-5,
    8.022350691745271461e-5,
    -7.8350709922797334341e-5,
    7.6539105955228882521e-5,
    -7.47870599207233639e-5,
    7.3092823109091679924e-5,
    -7.1454575210547634828e-5,
    6.9870457151111611051e-5,
    -6.8338596631757981721e-5,
    6.6857127862654310027e-5,
    -6.5424206675792701007e-5,
    6.4038021957307677286e-5,
    -6.2696804149991603058e-5,
    6.1398831425625791382e-5,
    -6.0142434007037987677e-5,
    5.8925997024559099533e-5,
    -5.7747962215581229316e-5,
    5.660682871516898594e-5,
    -5.550115313698787698e-5,
    5.4429549104712394333e-5,
    -5.3390686362616444786e-5,
    5.2383289568695263405e-5,
    -5.1406136853206477136e-5,
    5.0458058208984770448e-5,
    -4.953793376651256876e-5,
    4.8644691995906125741e-5,
    -4.7777307869212562557e-5,
    4.6934801009315885608e-5,
    -4.611623384600295016e-5,
    4.5320709795089249673e-5,
    -4.4547371472743820068e-5,
    4.3795398954116233004e-5,
    -4.3064008082921899665e-5,
    4.2352448836675354922e-5,
    -4.1660003750685920825e-5,
    4.0985986402673754337e-5,
    -4.03297399588677354e-5,
    3.9690635781661762144e-5,
    -3.906807209829341811e-5,
    3.8461472729536462531e-5,
    -3.7870285877039817384e-5,
    3.7293982967679106283e-5,
    -3.6732057553094664938e-5,
    3.618402426245780969e-5,
    -3.5649417806423155865e-5,
    3.5127792030179204545e-5,
    -3.4618719013494310816e-5,
    3.4121788215664002747e-5,
    -3.3636605663293123202e-5,
    3.3162793178888080471e-5,
    -3.2699987648287088812e-5,
    3.2247840325016790047e-5,
};

inline constexpr std::array<double, 90> k_c3_taylor = {
    6.4943415637860082305e-4,
    2.2947209362139917695e-4,
    -5.4568019226905543778e-4,
    6.2513320208605916768e-4,
    -6.0895462345034747298e-4,
    5.5723767459379572505e-4,
    -4.9563937884811897086e-4,
    4.3491539415586842945e-4,
    -3.7924867919119176722e-4,
    3.2990689575060893048e-4,
    -2.8689054124828361924e-4,
    2.4968757970495292236e-4,
    -2.1761928246372063575e-4,
    1.8999512450519066803e-4,
    -1.661775369318975188e-4,
    1.456042373148653461e-4,
    -1.2779108337943805438e-4,
    1.1232655296435100306e-4,
    -9.8863190084968276166e-5,
    8.7108520334624648284e-5,
    -7.6816538283677418547e-5,
    6.7780183608939165161e-5,
    -5.9824895334577392807e-5,
    5.2803186269646312826e-5,
    -4.6590121987022187019e-5,
    4.1079574358818787587e-5,
    -3.6181125238847827789e-5,
    3.1817509514638751554e-5,
    -2.7922502616788762915e-5,
    2.4439172956371072224e-5,
    -2.1318433531185122948e-5,
    1.8517838756802310231e-5,
    -1.6000582470083951591e-5,
    1.3734661211991537561e-5,
    -1.1692173565701621581e-5,
    9.8487317479772763384e-6,
    -8.1829660466297317705e-6,
    6.6761062546468522398e-6,
    -5.3116271312375038391e-6,
    4.0749472524908097579e-6,
    -2.9531725059971004266e-6,
    1.9348770205609529282e-6,
    -1.0099155731536956932e-6,
    1.6926253592656488079e-7,
    5.9512673915533813953e-7,
    -1.2904355161145878981e-6,
    1.9230891067029229451e-6,
    -2.4988445299734612962e-6,
    3.0228684084960341435e-6,
    -3.4998047926647923879e-6,
    3.9338343409400012993e-6,
    -4.328726064343083927e-6,
    4.6878826602458922155e-6,
    -5.0143803070921563833e-6,
    5.3110036629731157766e-6,
    -5.5802767027146338936e-6,
    5.8244899368526794059e-6,
    -6.0457244787332566774e-6,
    6.2458733606319127389e-6,
    -6.4266604443176308673e-6,
    6.5896572242917342173e-6,
    -6.7362977816933414297e-6,
    6.8678921124819179963e-6,
    -6.9856380240714391747e-6,
    7.0906317693378539677e-6,
    -7.1838775652149824257e-6,
    7.2662961243999634885e-6,
    -7.3387323125596873233e-6,
    7.4019620294871007259e-6,
    -7.4566984005827770725e-6,
    7.5035973545639001104e-6,
    -7.5432626542022327806e-6,
    7.5762504389716469662e-6,
    -7.6030733315802588263e-6,
    7.6242041543323844488e-6,
    -7.640079295992161465e-6,
    7.6511017652018589579e-6,
    -7.6576439624563595912e-6,
    7.6600501990762013209e-6,
    -7.6586389884906101238e-6,
    7.6537051323838039726e-6,
    -7.6455216218248037227e-6,
    7.6343413713518686621e-6,
    -7.6203988020818750821e-6,
    7.6039112882316380921e-6,
    -7.5850804799455943617e-6,
    7.5640935139991855253e-6,
    -7.5411241227695013208e-6,
    7.5163336508166562232e-6,
    -7.489871987485629643e-6,
};

}  // namespace mlcp::specfun::detail
