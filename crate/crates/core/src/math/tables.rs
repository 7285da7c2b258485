// Generated by tools/gen_tables.py -- do not edit by hand.
// Chebyshev panels use the c0-halved Clenshaw convention; series
// arrays are ascending powers of 1/x^2.
#![allow(clippy::excessive_precision)]

pub(crate) const ERFCX_K: f64 = 3.75;
pub(crate) const ERFCX_COEF: [f64; 48] = [
    2.3551578691348034, -0.004590054580646478, -0.08424913336651792, 0.05920993999819189,
    -0.026658668435305753, 0.009074997670705265, -0.002413163540417608, 0.0004907758365258086,
    -6.916973302501207e-05, 4.13902798607301e-06, 7.74038306619849e-07, -2.1886401049234397e-07,
    1.076499946567091e-08, 4.521959811218287e-09, -7.754400208831351e-10, -6.318088340886684e-11,
    2.86879501093067e-11, 1.9455868545777347e-13, -9.65469674843344e-13, 3.25254814814874e-14,
    3.3478119482868056e-14, -1.864562880419313e-15, -1.2507950530688648e-15, 7.418235256624044e-17,
    5.068148904796111e-17, -2.2370566594359995e-18, -2.187342944303018e-18, 2.6766327399258768e-20,
    9.736561401741451e-20, 3.321484090510137e-21, -4.290286707901321e-21, -4.1342793496029624e-22,
    1.7694365970205107e-22, 3.2970951644292894e-23, -6.130146617097234e-24, -2.17644252944613e-24,
    1.152624537617772e-25, 1.2390920572689572e-25, 6.5518080534797e-27, -5.91408663539926e-27,
    -1.0190713150379113e-27, 2.051337823584263e-28, 8.179698129789833e-29, -1.1679899690161721e-30,
    -4.824221820280006e-30, -5.906961960709107e-31, 1.99531044514745e-31, 6.809476186024747e-32,
];

pub(crate) const C_IG: f64 = -0.4908775065053559;
pub(crate) const K_E: f64 = 0.5538959519364355;
pub(crate) const IG_NEG_COEF: [f64; 17] = [
    -0.125, 0.09375, -0.15625, 0.41015625,
    -1.4765625, 6.767578125, -37.705078125, 247.4395751953125,
    -1869.54345703125, 15984.596557617188, -152580.23986816406, 1608450.0286102295,
    -18559038.791656494, 232650807.7096939, -3148540931.004524, 45752235403.65949,
    -710505302739.1827,
];
pub(crate) const H_NEG_COEF: [f64; 18] = [
    0.125, -0.3125, 1.0, -4.0625,
    20.2265625, -119.80078125, 824.671875, -6477.890625,
    57223.23486328125, -561758.9172363281, 6069082.5439453125, -71572017.09594727,
    914966320.9144592, -12604733781.389236, 186166014627.42004, -2934667594687.115,
    49180788139263.52, -873152656539266.6,
];
pub(crate) const IH_NEG_COEF: [f64; 18] = [
    0.0625, -0.078125, 0.16666666666666666, -0.5078125,
    2.02265625, -9.9833984375, 58.90513392857143, -404.8681640625,
    3179.068603515625, -28087.945861816406, 275867.3883611506, -2982167.3789978027,
    35191012.34286381, -450169063.62104416, 6205533820.914001, -91708362333.97235,
    1446493768801.8682, -24254240459424.074,
];
pub(crate) const DFH_COEF: [f64; 24] = [
    1.0, 0.5, 0.75, 1.875,
    6.5625, 29.53125, 162.421875, 1055.7421875,
    7918.06640625, 67303.564453125, 639383.8623046875, 6713530.554199219,
    77205601.37329102, 965070017.1661377, 13028445231.742859, 188912455860.27145,
    2928143065834.2075, 48314360586264.42, 845501310259627.4, 1.5641774239803108e+16,
    3.050145976761606e+17, 6.252799252361292e+18, 1.3443518392576778e+20, 3.024791638329775e+21,
];
pub(crate) const IH_POS_COEF: [f64; 24] = [
    1.0, 1.0, 1.75, 4.5,
    15.5625, 68.4375, 367.734375, 2342.8125,
    17289.31640625, 145105.48828125, 1364911.3037109375, 14220542.724609375,
    162528857.72094727, 2021507592.352295, 27178998378.208923, 392754943696.8384,
    6070182615408.915, 99910912817240.2, 1744699525614789.2, 3.2216419733143604e+16,
    6.271787950075967e+17, 1.2838176599941057e+19, 2.756551265251194e+20, 6.194825593368649e+21,
];
pub(crate) const IG_EUL_COEF: [f64; 13] = [
    0.25, -0.1875, 0.3125, -0.8203125,
    2.953125, -13.53515625, 75.41015625, -494.879150390625,
    3739.0869140625, -31969.193115234375, 305160.4797363281, -3216900.057220459,
    37118077.58331299,
];

pub(crate) const IG_MID_XMIN: f64 = -6.0;
pub(crate) const IG_MID_XMAX: f64 = 1.0;
pub(crate) const IG_MID_PANELS: usize = 7;
pub(crate) const IG_MID_NCOEF: usize = 25;
pub(crate) const IG_MID_COEF: [f64; 175] = [
    -2.6925962801347763, 0.04482363363223768, 0.0009893195218776767, 2.8690462155944704e-05,
    9.229529968726429e-07, 3.1244492348559765e-08, 1.087514786283495e-09, 3.844765268244413e-11,
    1.3708271898544294e-12, 4.9071604639068526e-14, 1.7584430789144726e-15, 6.295009831278018e-17,
    2.2480925874936895e-18, 8.000843152858808e-20, 2.835541885697999e-21, 1.0001751813078527e-22,
    3.509774796022261e-24, 1.2249415880356607e-25, 4.250980046308012e-27, 1.4666667639253477e-28,
    5.030302539142488e-30, 1.7149224565066045e-31, 5.811155371086827e-33, 1.95720780342694e-34,
    6.544770165331369e-36, -2.4948607718560614, 0.05442535062401695, 0.0014486961438689534,
    5.03571799686857e-05, 1.9309227899627944e-06, 7.751865176194347e-08, 3.184792093406535e-09,
    1.323279614525825e-10, 5.5228211719854024e-12, 2.3056190522883636e-13, 9.601865149499122e-15,
    3.981819669950403e-16, 1.642223213992808e-17, 6.730386517908955e-19, 2.739372589321504e-20,
    1.1068558378026025e-21, 4.438561967463307e-23, 1.76615374567708e-24, 6.97274572481658e-26,
    2.7311462251945003e-27, 1.0613179246836303e-28, 4.0917756725500436e-30, 1.5651640168438057e-31,
    5.940349129000793e-33, 2.2340713255125975e-34, -2.2492123958017687, 0.06911024443577916,
    0.0023075563977258073, 9.956017818818128e-05, 4.694920310775039e-06, 2.2991296313168395e-07,
    1.1438517324412893e-08, 5.717790268916974e-10, 2.8539830804581794e-11, 1.4172528550710462e-12,
    6.986152559051151e-14, 3.4135923935538904e-15, 1.6519043659933588e-16, 7.91266022800337e-18,
    3.7504864137489664e-19, 1.758773571179166e-20, 8.159531500281334e-22, 3.74507979283302e-23,
    1.700698577564937e-24, 7.642042033672529e-26, 3.398313229541279e-27, 1.4957282821203994e-28,
    6.516967093343598e-30, 2.811329263496132e-31, 1.198829494519382e-32, -1.9258529872090893,
    0.0941104417042936, 0.004174243743594947, 0.00023455561045753387, 1.4173116685048547e-05,
    8.773119281214406e-07, 5.4532288594311185e-08, 3.3714775437290057e-09, 2.063025962290254e-10,
    1.2460997163474637e-11, 7.419042964780538e-13, 4.350911728590193e-14, 2.5125949144632543e-15,
    1.4287553936600265e-16, 8.000888286840347e-18, 4.413237402253162e-19, 2.3984714222692167e-20,
    1.2847076271628938e-21, 6.784358950142575e-23, 3.533407412313718e-24, 1.8155363465417743e-25,
    9.206335628146872e-27, 4.60872308386318e-28, 2.2783563959250993e-29, 1.1100676722750766e-30,
    -1.4567233372502326, 0.14465515116209432, 0.009296636643041948, 0.0007267721696248739,
    5.9291460426041605e-05, 4.841233258724885e-06, 3.8960202080158546e-07, 3.070882516169492e-08,
    2.3647545962600914e-09, 1.7776295350898262e-10, 1.304500015436407e-11, 9.349561286008166e-13,
    6.54889580103127e-14, 4.486418461626829e-15, 3.0083243233122553e-16, 1.9759668771013788e-17,
    1.2723086840927586e-18, 8.036695341850686e-20, 4.98349264526376e-21, 3.0356010725154823e-22,
    1.8175134433221898e-23, 1.0702491248014037e-24, 6.20160619866309e-26, 3.537982564980003e-27,
    1.9821997258948288e-28, -0.634468248728355, 0.2832196763928152, 0.030006459946597733,
    0.003542601196863265, 0.0004133277934970102, 4.647685050819303e-05, 5.008363596465736e-06,
    5.171759117593398e-07, 5.126293152698429e-08, 4.8883046134463635e-09, 4.494670914039213e-10,
    3.9936625589900955e-11, 3.43602488943768e-12, 2.867832488842308e-13, 2.325901379883145e-14,
    1.835814421128131e-15, 1.4120999067696311e-16, 1.0598548640648112e-17, 7.770857735365096e-19,
    5.571702992926272e-20, 3.910395263498053e-21, 2.6887532224471134e-22, 1.8127293128234495e-23,
    1.1991884868382895e-24, 7.758827947450947e-26, 1.6157266040813483, 0.9713365968372368,
    0.1950003541743945, 0.03705650943088873, 0.006416235191182568, 0.001018153693503477,
    0.000149511312629474, 2.0496682080085e-05, 2.642667169667539e-06, 3.224041135779739e-07,
    3.740789123779458e-08, 4.145568067989133e-09, 4.403903994740177e-10, 4.4985901143353396e-11,
    4.430689865261677e-12, 4.217419551398194e-13, 3.8878113647952954e-14, 3.4773404886724107e-15,
    3.02265081163966e-16, 2.5572297748599273e-17, 2.10849452349964e-18, 1.6963767396166062e-19,
    1.3332102190561446e-20, 1.0245377759785732e-21, 7.665356923024109e-23,
];
pub(crate) const IG_LOG_XMIN: f64 = 1.0;
pub(crate) const IG_LOG_XMAX: f64 = 8.0;
pub(crate) const IG_LOG_PANELS: usize = 7;
pub(crate) const IG_LOG_NCOEF: usize = 25;
pub(crate) const IG_LOG_COEF: [f64; 175] = [
    3.890055591095039, 1.309786030445398, 0.07820352002342812, 0.010333429685860226,
    -0.000573264792276135, -8.987412861458953e-06, -1.0202427758050467e-05, 2.194232228011551e-06,
    -9.577258945691064e-08, 1.8559204621557654e-08, -6.8433032092497e-09, 6.953442467460004e-10,
    -6.167924083629534e-11, 2.069919573565886e-11, -3.3807090045638283e-12, 3.1721283199887445e-13,
    -6.714661876611912e-14, 1.4097891915239725e-14, -1.694979587528621e-15, 2.560046715220906e-16,
    -5.547035674128882e-17, 8.359392090482446e-18, -1.1394051055768032e-18, 2.2020230668758216e-19,
    -3.7427939526226665e-20, 10.913231691217723, 2.252038704233563, 0.13885586317603235,
    0.00027816754876363735, -0.00033795614180091724, 5.525839352732296e-05, -1.972015352162269e-06,
    -6.92505763385308e-07, 9.615690575839907e-08, 4.8545862386346e-09, -2.294980055962634e-09,
    1.0788898261579856e-10, 3.44184694075956e-11, -4.948771620446494e-12, -2.502455018358868e-13,
    1.1834035484973765e-13, -5.327080127191928e-15, -1.877829867004818e-15, 2.7036225509611447e-16,
    1.399935417826906e-17, -6.711292036156429e-18, 3.0990626838391134e-19, 1.0980912384457638e-19,
    -1.6135541454023364e-20, -8.09269333556987e-22, 22.109928682432656, 3.3403164819464832,
    0.13230552569739085, -0.0005083272377417846, 3.974577776502227e-05, -2.120601529502202e-06,
    -1.7466042004915705e-07, 7.390991573701552e-08, -1.1835899751038998e-08, 1.0345033793076445e-09,
    -6.671298734875735e-12, -1.2639823200554102e-11, 1.9460783697219604e-12, -1.2268286624055493e-13,
    -5.779259162021684e-15, 2.1783378842572845e-15, -2.3450943553071514e-16, 9.063389110904907e-18,
    1.2015273596797227e-18, -2.69870200360032e-19, 2.7204699138351253e-20, -1.116699190674991e-21,
    -1.5005156157464247e-22, 3.793747400094046e-23, -4.15980415395769e-24, 37.56057232869424,
    4.382058515766531, 0.12871031551346548, -0.0001676445118622985, 9.278095114419106e-06,
    -6.008988042279429e-07, 4.3982938961734117e-08, -3.3968046409926028e-09, 2.4041205328250277e-10,
    -1.0401548812000678e-11, -7.76383107417709e-13, 2.695339548325079e-13, -3.99480202619959e-14,
    3.9617578307788395e-15, -2.429855621908404e-16, 6.032316385900768e-19, 1.9564749773861984e-18,
    -2.6481187995986213e-19, 1.8963023496694087e-20, -4.451486541853763e-22, -7.100276793393371e-23,
    1.0250858514826493e-23, -6.489188739256768e-25, 1.1172596405101819e-26, 1.6899885856513777e-27,
    57.138119961167654, 5.4055643371847575, 0.12731800593315054, -7.90961746735856e-05,
    3.1738901269901114e-06, -1.4234936305128344e-07, 6.986399397698189e-09, -3.7163406093073254e-10,
    2.1340179406005536e-11, -1.3191777545967064e-12, 8.703627052891391e-14, -5.976454694231995e-15,
    4.045148599742762e-16, -2.420646752827991e-17, 9.179412669183457e-19, 4.2552255307446036e-20,
    -1.4382198410223736e-20, 1.9378594764150023e-21, -1.8577591101027528e-22, 1.3141028006176533e-23,
    -5.719287681105101e-25, -7.330380432087775e-27, 4.27359387672384e-27, -4.64153394352099e-28,
    2.9723147929238594e-29, 80.79244577511783, 6.42100452708976, 0.126601893690562,
    -4.452610451874894e-05, 1.4327912585659935e-06, -5.0645118290531407e-08, 1.9213748986919498e-09,
    -7.728272681764009e-11, 3.272033697770214e-12, -1.4517336116069152e-13, 6.731913689591503e-15,
    -3.2586078112004965e-16, 1.6465311567476035e-17, -8.693053506757397e-19, 4.799747170744751e-20,
    -2.766124835884321e-21, 1.6481618856370472e-22, -9.9188682394834e-24, 5.7614297693649e-25,
    -2.950762896225056e-26, 1.010366614432981e-27, 2.590581666188173e-29, -9.562287900429202e-30,
    1.1775011376598749e-30, -1.0504251331675622e-31, 108.49917577741192, 7.432008481128486,
    0.12617821443576072, -2.776986572854948e-05, 7.514860568167094e-07, -2.214528476729582e-08,
    6.941157735131652e-10, -2.285078144607601e-11, 7.841318983759734e-13, -2.7908319174576557e-14,
    1.0266770603612877e-15, -3.894145644094331e-17, 1.520160296925341e-18, -6.099834127366644e-20,
    2.5139139662905505e-21, -1.0637248452547315e-22, 4.62164589847565e-24, -2.063077542311677e-25,
    9.473024433954557e-27, -4.481498997527292e-28, 2.1879138890672517e-29, -1.1027604896940955e-30,
    5.719737312901116e-32, -3.021655608557868e-33, 1.5875505242547997e-34,
];
pub(crate) const H_LOG_XMIN: f64 = -6.0;
pub(crate) const H_LOG_XMAX: f64 = 6.0;
pub(crate) const H_LOG_PANELS: usize = 12;
pub(crate) const H_LOG_NCOEF: usize = 25;
pub(crate) const H_LOG_COEF: [f64; 300] = [
    -14.532383491232366, 0.25977444464155286, 0.005366522018665936, 0.00014134231220720652,
    4.006341962046125e-06, 1.1575681366215601e-07, 3.320126099673974e-09, 9.285510169563383e-11,
    2.490241805609324e-12, 6.268565174715008e-14, 1.4281456578626673e-15, 2.7063429437434086e-17,
    3.0255825683759745e-19, -5.985362813701843e-21, -5.772321210872809e-22, -2.6073319621918828e-23,
    -9.05733205598466e-25, -2.567987098826691e-26, -5.54846740974484e-28, -5.277712010646923e-30,
    2.988001210510082e-31, 2.460653895547115e-32, 1.2099797753277731e-33, -9.466193559034493e-35,
    1.289977398687801e-34, -13.394867242876675, 0.3107900079618511, 0.0075405346412836085,
    0.0002293713597393165, 7.385921871617912e-06, 2.381843615497426e-07, 7.467909931871895e-09,
    2.221607009253204e-10, 6.081213434021303e-12, 1.4477212679086628e-13, 2.5553284297234916e-15,
    5.651480105643655e-18, -2.242906300249689e-18, -1.3492360578514794e-19, -5.3615244131674434e-21,
    -1.5805698832261172e-22, -2.7815764214550815e-24, 4.388780689679713e-26, 7.152226377928477e-27,
    4.293568755359188e-28, 1.913069762697255e-29, 6.89623754197195e-31, 1.945002087865384e-32,
    3.243129248396837e-34, -6.501330483321827e-36, -12.01021823202942, 0.3845707314960268,
    0.01119766494583464, 0.0003979727025306496, 1.4582302796332726e-05, 5.195281609076838e-07,
    1.7324436166576345e-08, 5.170156360119747e-10, 1.262996455204103e-11, 1.802395822548827e-13,
    -3.9666250054440865e-15, -4.54057246367765e-16, -2.151568633090832e-17, -6.223854544815967e-19,
    -2.5072552680143402e-21, 1.0840340678916979e-21, 8.868231796286116e-23, 4.6607556583171925e-24,
    1.8167438914793965e-25, 4.660534324163762e-27, -7.128659541033029e-30, -1.0158729020331635e-29,
    -7.897526718209705e-31, -4.1823076526013754e-32, -1.7098930853069646e-33, -10.25566710928663,
    0.4981855620143665, 0.017804858744957675, 0.0007428045364512382, 3.0556543784461264e-05,
    1.1582382869036067e-06, 3.7883090149789066e-08, 9.332773699759288e-10, 8.060491604062855e-12,
    -7.494900713835777e-13, -5.001437715821251e-14, -1.172792294898318e-15, 6.216743578495523e-17,
    8.899500133853366e-18, 5.814642289535224e-19, 2.4090825901715072e-20, 3.8395944482876173e-22,
    -3.783049111354847e-23, -4.534431891325362e-24, -2.971714557919526e-25, -1.3689834368621674e-26,
    -3.9456278857299264e-28, 1.7320998126776064e-30, 1.1273153712683848e-30, 8.711086612770585e-32,
    -7.907080344886919, 0.6867165927796761, 0.030600953441652912, 0.001475376264149406,
    6.492324667082006e-05, 2.37142736628985e-06, 6.096218700262645e-08, 4.40425367941621e-10,
    -3.7191644982948404e-11, 3.8220075151292253e-13, 3.274456554582797e-13, 2.9823503965140583e-14,
    1.254839601506185e-15, -2.2374204809098457e-17, -8.445968941618057e-18, -7.823522986403415e-19,
    -4.4672231987938683e-20, -1.402004395753488e-21, 2.549629086772507e-23, 6.886101002838931e-24,
    5.131613082397609e-25, 2.232828017172396e-26, 3.942572603678762e-28, -1.9499336994522105e-29,
    -1.2468183543556942e-30, -4.528117401835927, 1.024138295394586, 0.05636959584458074,
    0.0029764579309728744, 0.00012789628796245508, 4.019898158308016e-06, 9.203187235972718e-08,
    4.338513366613351e-09, 4.099455315525143e-10, 8.836078027034369e-12, -3.665808150933626e-12,
    -6.005186177774218e-13, -5.030375732151223e-14, -2.2157173911114432e-15, 3.515072711689053e-17,
    1.5705448493526356e-17, 1.564971855794607e-18, 1.0152314081317395e-19, 4.703763788968306e-21,
    1.1287697207240422e-22, -1.0268120877528836e-23, -2.416633380570722e-24, -3.072941384299877e-25,
    -2.788462738463017e-26, -1.6962513435312693e-27, 0.7550207593310353, 1.6598957080613492,
    0.10754254164233985, 0.005831842708184414, 0.00023880207838873564, 6.324922406077462e-06,
    -2.7152383908207055e-07, -9.719580147014856e-08, -1.300024805749223e-08, -8.425356543897726e-10,
    2.58010411602881e-11, 1.2582020622934137e-11, 1.441254017129856e-12, 6.737944540815216e-14,
    -5.5993361880638055e-15, -1.5124198891150855e-15, -1.5905751267203466e-16, -6.626703087780015e-18,
    8.19295208012191e-19, 1.9819664501057818e-19, 2.003641852825768e-20, 6.784928351228464e-22,
    -1.3228967991453251e-22, -2.7583323297732074e-23, -2.583876053454559e-24, 9.650124756043645,
    2.8642882206863503, 0.19889970768421275, 0.008584041110781392, -0.00012055302567152403,
    -5.9074454810270226e-05, -2.5919428103278752e-06, 6.290839544372402e-07, 9.0691778598688e-08,
    -3.2741115736256382e-09, -1.8356500336232026e-09, -9.272411792781165e-11, 2.5286054962999014e-11,
    3.817741479009923e-12, -1.4188443758906377e-13, -8.336571086316575e-14, -4.522084033673156e-15,
    1.1910220533782487e-15, 1.9025065492538166e-16, -6.315772520023883e-18, -4.239390316415094e-18,
    -2.4942203497550986e-19, 6.099768887932382e-20, 1.0280277400468135e-20, -2.800270102995982e-22,
    24.795653705768277, 4.760479585872386, 0.2606906547117062, 0.0009424768158123602,
    -0.00039540208079228, 4.841026255503021e-05, 3.409961679026388e-07, -8.195069775931916e-07,
    6.154769099064706e-08, 1.0133773340343363e-08, -1.8926763126750475e-09, -5.2624302808931163e-11,
    3.9549335434327284e-11, -1.83589700058512e-12, -6.249519524172959e-13, 8.063085575959236e-14,
    6.246217470641082e-15, -2.0346432980168436e-15, 2.748186815097698e-17, 3.8275615058407456e-17,
    -3.4054199216611107e-18, -5.125894565923047e-19, 1.0715844604281982e-19, 2.3220159731789653e-21,
    -2.3925605297801317e-21, 48.00452059193669, 6.840428212626831, 0.25724368596784225,
    -0.0004838078450855127, 3.256796059215271e-05, -5.572679774060945e-07, -4.210411796995712e-07,
    9.864235450723818e-08, -1.2344287393882255e-08, 7.05503886666451e-10, 5.848424205140423e-11,
    -1.8271142954839082e-11, 1.8808975742857792e-12, -3.470530609330916e-14, -1.7938452136328737e-14,
    2.82504709707835e-15, -1.7613435581032534e-16, -7.62753163595687e-18, 2.995533079294065e-18,
    -3.3725377322024827e-19, 1.4872535014596884e-20, 1.7377396391989973e-21, -4.445804688735733e-22,
    4.650441211636275e-23, -1.5398291478939967e-24, 79.45530204054366, 8.882058666088641,
    0.2537102171950562, -0.00016759456412915953, 9.257887363606822e-06, -5.942545290709082e-07,
    4.2181135751389606e-08, -2.990133855460206e-09, 1.6379979935447733e-10, 1.580798693139195e-12,
    -2.3023271932988555e-12, 4.1971266425103216e-13, -4.954850528948054e-14, 3.955621192572391e-15,
    -1.4271182859049365e-16, -1.4680553551519935e-17, 3.264458182811179e-18, -3.156311516297658e-19,
    1.5305960090089837e-20, 3.8277607113271225e-22, -1.4446519191702183e-22, 1.3416939936536138e-23,
    -5.824289292469358e-25, -9.694327091940764e-27, 3.1742178431330782e-27, 119.03284984698998,
    10.90556433720895, 0.2523180059157792, -7.909616450918766e-05, 3.1738852004627696e-06,
    -1.4234735395783603e-07, 6.985700546314395e-09, -3.7142434798500254e-10, 2.1285392259737873e-11,
    -1.306629397379825e-12, 8.450398345353212e-14, -5.524884940654129e-15, 3.333134164386451e-16,
    -1.4302598294760608e-17, -2.8939740465096175e-19, 1.6977546974574508e-19, -2.564141174787581e-20,
    2.71871101100254e-21, -2.1883529420832166e-22, 1.2292062604900985e-23, -2.2840942336836504e-25,
    -4.71029865268604e-26, 7.167225665120408e-27, -5.799935997152996e-28, 2.705354931774615e-29,
];
pub(crate) const IH_LOG_XMIN: f64 = -6.0;
pub(crate) const IH_LOG_XMAX: f64 = 6.0;
pub(crate) const IH_LOG_PANELS: usize = 12;
pub(crate) const IH_LOG_NCOEF: usize = 25;
pub(crate) const IH_LOG_COEF: [f64; 300] = [
    -12.435641122762885, 0.17526481026376522, 0.0037030910502663327, 0.0001007555022442131,
    2.9804467784947955e-06, 9.086225746070419e-08, 2.7847951991388573e-09, 8.453827949016311e-11,
    2.51333000539028e-12, 7.23741502422462e-14, 1.9911291373260288e-15, 5.124010738795294e-17,
    1.1843078108956611e-18, 2.2120385720492128e-20, 1.9074258239398155e-22, -9.803073481964928e-24,
    -7.655102611152424e-25, -3.593170870774745e-26, -1.3841365926363574e-27, -4.669882903342838e-29,
    -1.3919420381031646e-30, -3.5483072967472764e-32, -6.774281116469326e-34, -2.7925300937523504e-36,
    5.9328852924931696e-37, -11.66631289875821, 0.21070297387465112, 0.005272684708585563,
    0.00016761752577046425, 5.7173745517876485e-06, 1.9827760041718056e-07, 6.810319972141629e-09,
    2.2760583549253674e-10, 7.278493290049007e-12, 2.178831859897909e-13, 5.876165883001276e-15,
    1.3019241036306343e-16, 1.569435386519156e-18, -5.332293113441e-20, -5.398158347665043e-21,
    -2.879591480526842e-22, -1.2128569670562231e-23, -4.298268567951944e-25, -1.2519541494272506e-26,
    -2.5256515492231468e-28, 6.415738599033073e-31, 4.2431116391360556e-31, 2.948699998083147e-32,
    1.4797524144984318e-33, 6.184454491551578e-35, -10.723717771527383, 0.26285735618969963,
    0.007999892387088765, 0.0003024519493142965, 1.200723102709382e-05, 4.73679483772655e-07,
    1.8014324661640883e-08, 6.429617029003412e-10, 2.0742564126182255e-11, 5.587175816570829e-13,
    9.369572305047647e-15, -1.7455566390361603e-16, -2.7056331712400314e-17, -1.6646323127094806e-18,
    -7.544812943141228e-20, -2.6288782850944914e-21, -5.77078745487695e-23, 6.961637510841562e-25,
    1.7380050540362974e-25, 1.2640892314127834e-26, 6.681100602974711e-28, 2.8198138911668945e-29,
    9.093936391527688e-31, 1.529646950056881e-32, -6.605568932616031e-34, -9.515506833483082,
    0.3455495220779121, 0.013191261784387062, 0.0006015737176539866, 2.773532358290246e-05,
    1.2171861797914474e-06, 4.85722170833187e-08, 1.6441090644984032e-09, 3.867486750224608e-11,
    -1.3223703452848374e-13, -8.585879376767715e-14, -6.251523319525024e-15, -2.8894952342205827e-16,
    -7.53439109345584e-18, 1.593991780831336e-19, 3.624379588672507e-20, 2.8249268433164798e-21,
    1.5109060130032395e-22, 5.464843515279085e-24, 5.0245230857141244e-26, -1.1974410183511144e-26,
    -1.280172627358577e-27, -8.410690594429349e-29, -4.035538226221088e-30, -1.26015305143057e-31,
    -7.862815556449513, 0.48984742975483747, 0.024129221585108804, 0.0013211674915026062,
    6.802573589134644e-05, 3.028862646432368e-06, 1.0208230402820406e-07, 1.3475082537661634e-09,
    -1.3112215015505433e-10, -1.2515813215870073e-11, -4.884891037397907e-13, 9.520666301316494e-15,
    3.0663962460373704e-15, 2.5805010422015376e-16, 1.182960980587256e-17, 7.947228726629943e-21,
    -5.497656449520399e-20, -5.856157363865998e-21, -3.672558420688211e-22, -1.2329664330178642e-23,
    3.2416741326028262e-25, 8.546265259315476e-26, 7.196027254273628e-27, 3.5475813999391506e-28,
    4.7839765622701876e-30, -5.38365635915879, 0.770277117518256, 0.04894536313623499,
    0.0030256273029955908, 0.0001517460534040737, 5.008196106272834e-06, 1.3851813088787716e-08,
    -8.158391508583812e-09, -5.294003943995199e-11, 6.512156537258855e-11, 5.9610616144078515e-12,
    1.5730927267189896e-14, -5.1674960057460425e-14, -6.344295743029644e-15, -3.663590033079729e-16,
    1.1015179455776836e-18, 2.3854099654765022e-18, 2.3821575258079984e-19, 1.0172510915029433e-20,
    -2.8858415214053137e-22, -7.189181671655358e-23, -3.7425840755191995e-24, 1.4458268860096734e-25,
    3.451552393193629e-26, 1.618104904264218e-27, -1.2213641579622723, 1.3557969280906157,
    0.10303967368510754, 0.006225811377646749, 0.00024643896811669334, 4.61440706751101e-06,
    -6.736858968857531e-09, -2.2798157350305755e-08, -8.807471477072498e-09, -1.379360050204448e-09,
    -8.740151748450016e-11, 4.858520949830993e-12, 1.5861347915844425e-12, 1.5313015653086257e-13,
    4.908629970630349e-15, -6.731880820316872e-16, -1.3261599874591077e-16, -1.3871211183567097e-17,
    -9.41196117193333e-19, 2.7605700078379005e-21, 1.3239216844358342e-20, 2.223161545560234e-21,
    1.8721000687492135e-22, 1.5912662015144255e-24, -1.920971906434755e-24, 6.4210565780344835,
    2.547594037607857, 0.20126981155710236, 0.009601417998720501, -2.543344409790749e-05,
    -5.979936657883124e-05, -5.468067764333022e-06, 3.164186266107977e-07, 1.30331299885566e-07,
    7.62927371174797e-09, -1.6670500842009545e-09, -3.114932105330761e-10, -3.189659474486045e-13,
    5.896278185888135e-12, 6.281673653724048e-13, -4.783599446127382e-14, -1.7582941018177517e-14,
    -9.571577956633138e-16, 2.5012443041321875e-16, 4.685160812344642e-17, 2.585953546713775e-20,
    -9.602178449678578e-19, -1.0625549156389046e-19, 8.193772235910057e-21, 3.1612814848754603e-21,
    20.42293193213122, 4.515248451463596, 0.27422620758916627, 0.0009188303501961147,
    -0.0005639019722659851, 6.211153739885101e-05, 3.0681686937275843e-06, -1.353811296206519e-06,
    3.454771232308453e-08, 2.525963947676072e-08, -2.344601656438596e-09, -3.855034680361282e-10,
    7.4443652593607e-11, 3.607327853839893e-12, -1.8466062192786423e-12, 3.880831306353885e-14,
    3.826379544055687e-14, -3.3337011882398008e-15, -6.403911613269537e-16, 1.1689077815033086e-16,
    6.8718378571491975e-18, -3.1161314594049185e-18, 4.759901488212374e-20, 6.856777017375781e-20,
    -5.84259655887212e-21, 42.83331089820308, 6.680836437428923, 0.2644994693826205,
    -0.0009731186679393787, 6.708326794301286e-05, -1.6646470217732396e-06, -7.158131250086509e-07,
    1.735066966372962e-07, -2.1017859340124447e-08, 9.561735290306333e-10, 1.5862001432867563e-10,
    -3.830970421008363e-11, 3.4796039036090925e-12, 1.6751970353765493e-14, -4.875781426586495e-14,
    6.774225297059151e-15, -3.5058717761846493e-16, -3.529732765023685e-17, 9.748499668881213e-18,
    -1.0205359466319318e-18, 2.8139365356532177e-20, 9.521534763311685e-21, -1.904072496358003e-21,
    1.6778584273582013e-22, 2.4648349107873643e-25, 73.73484996159888, 8.76411732051535,
    0.257420442286039, -0.0003351933570714907, 1.8517607591506657e-05, -1.1891649051550283e-06,
    8.455917794792144e-08, -6.030495436244106e-09, 3.3858608656661835e-10, 1.0881695146071462e-12,
    -4.265950238716107e-12, 7.915349107425978e-13, -9.325850011340511e-14, 7.302996997135764e-15,
    -2.321696139332066e-16, -3.31664304816197e-17, 6.739318899424376e-18, -6.392866274648276e-19,
    3.072350571651998e-20, 7.8894177921812405e-22, -2.9612794241485138e-22, 2.8452794104681997e-23,
    -1.435967412881751e-24, 1.4333465390682342e-26, 3.3600882935146165e-27, 112.88994556116242,
    10.81112867441686, 0.2546360118323183, -0.0001581923294749778, 6.347770630009768e-06,
    -2.8469480531145915e-07, 1.3971436647683826e-08, -7.428599678061543e-10, 4.257391730543053e-11,
    -2.6140280621114404e-12, 1.691758968647525e-13, -1.1082515770128026e-14, 6.7235009809379e-16,
    -2.9503597647618935e-17, -4.520701767933139e-19, 3.235090556994982e-19, -4.9467111169586914e-20,
    5.255001977312096e-21, -4.216183990855083e-22, 2.3377889849162466e-23, -3.8353984423914533e-25,
    -9.72692841621083e-26, 1.4349836734214265e-26, -1.1485743654661162e-27, 5.294631241672895e-29,
];
