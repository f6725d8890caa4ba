// Generated by tests/oracle/gen_fixtures.py (mpmath). Do not edit by hand.
#![allow(dead_code, clippy::excessive_precision, clippy::approx_constant)]
use num_complex::Complex64;
const fn c(re: f64, im: f64) -> Complex64 { Complex64::new(re, im) }

pub const ML_HALF_ONE_AT_0_7: f64 = 2.7387021025613169992;
pub const ML_HALF_HALF_AT_1_3: f64 = 1.418990394707697504e+1;
pub const ML_HALF_HALF_AT_80_RAY: Complex64 = c(-3.3296234032034371745e+1, 1.5649720315246756539e+2);
pub const CAUSAL_HALF_W1_T1: Complex64 = c(6.6501651582843077355e-1, -1.913261757170703653);
pub const GENERAL_HALF_M0_W1_T1: Complex64 = c(-1.514319476769270975, -1.0639587962298634515);
/// (w, t, E_{1/2}(e^{-i pi/4} sqrt(t) w), offshell = -exp(z^2) erfc(z))
pub const HALF_SPLIT_GRID: [(f64, f64, Complex64, Complex64); 10] = [
    (1.0, 1.0, c(6.6501651582843077355e-1, -1.913261757170703653), c(-4.1558809590784866125e-1, -2.3031978755491063968e-1)),
    (2.0, 5.0, c(7.2491171713148825301e-1, -1.9127228946855405752), c(-9.1252406495295719114e-2, -8.6832393230285266452e-2)),
    (5.0e-1, 2.999999999999999889e-1, c(1.2044523943654221323, -3.0403020827869144359e-1), c(-7.8992524185899275854e-1, -1.5417079373320676495e-1)),
    (5.0e-1, 4.0, c(6.6501651582843077355e-1, -1.913261757170703653), c(-4.1558809590784866125e-1, -2.3031978755491063968e-1)),
    (1.5, 1.0000000000000000555e-1, c(1.2917283465600703586, -6.5292599183574752191e-1), c(-6.5785986757781620172e-1, -2.0671326757225660191e-1)),
    (1.5, 2.0, c(-6.2270671638841164111e-1, 1.7907116539799066208), c(-2.0111511752685222914e-1, -1.6434858135028749e-1)),
    (3.0, 5.0e-1, c(-6.2270671638841164111e-1, 1.7907116539799066208), c(-2.0111511752685222914e-1, -1.6434858135028749e-1)),
    (3.0, 3.0, c(-6.6239064858457244971e-1, -1.9880356403875969415), c(-7.8113031116900062971e-2, -7.5283783578590914631e-2)),
    (2.000000000000000111e-1, 1.0e+1, c(1.2722522479360992856, -1.0048541323328129424), c(-5.6986974006967084542e-1, -2.2601744771551187731e-1)),
    (4.0, 1.25, c(7.2491171713148825301e-1, -1.9127228946855405752), c(-9.1252406495295719114e-2, -8.6832393230285266452e-2)),
];
pub const GREEN_RET_NU1_DT1_DX0: Complex64 = c(-2.8209479177387814347e-1, -2.8209479177387814347e-1);
/// (lambda, x, ambiguity term at x for a(k) = 1 + k)
pub const AMBIGUITY_ONE_PLUS_K: [(i32, f64, Complex64); 6] = [
    (-1, 0.0, c(6.2831853071795864769, 0.0)),
    (-1, 6.9999999999999995559e-1, c(6.2831853071795864769, 4.3405219932461208772e-43)),
    (-1, -1.3000000000000000444, c(6.2831853071795864769, -7.6608330185982597009e-43)),
    (-2, 0.0, c(0.0, 6.2831853071795864769)),
    (-2, 6.9999999999999995559e-1, c(4.3982297150257102548, 6.2831853071795864769)),
    (-2, -1.3000000000000000444, c(-8.168140899333462699, 6.2831853071795864769)),
];
/// (t, x, psi) for the unit Gaussian packet centred at k = 1 under nu = 1
pub const FREE_GAUSSIAN_NU1: [(f64, f64, Complex64); 15] = [
    (0.0, -8.0, c(-2.0844250472243339361e-29, 1.4173488871159582303e-28)),
    (0.0, -3.0, c(-1.0913186989780827682e-4, 1.5556370793164408922e-5)),
    (0.0, 0.0, c(8.932438417380023314e-1, 0.0)),
    (0.0, 2.5, c(-1.381465027228216088e-3, -1.0319851781948903546e-3)),
    (0.0, 6.0, c(1.9893763213533453313e-16, 5.7892082650803985267e-17)),
    (1.0, -8.0, c(5.1827774023056520195e-6, 3.2715933241875128406e-5)),
    (1.0, -3.0, c(-2.4671010065382611051e-1, -1.0571573004849522038e-1)),
    (1.0, 0.0, c(3.8827814798075204541e-1, -2.9736662848275557434e-1)),
    (1.0, 2.5, c(1.146890986399856028e-2, 5.0255246437418769766e-2)),
    (1.0, 6.0, c(3.3117322682405523693e-5, -6.6061171508593482124e-7)),
    (5.0, -8.0, c(2.0861976749327565754e-1, -1.5136134307424686261e-1)),
    (5.0, -3.0, c(2.6734598107935218823e-1, 4.3274667195633526994e-2)),
    (5.0, 0.0, c(1.5940436411356008594e-1, -1.5160210987418319077e-1)),
    (5.0, 2.5, c(1.5921634810243971373e-1, -2.6717441113308419844e-2)),
    (5.0, 6.0, c(-7.8422520912978320778e-2, 3.2875708677624112697e-2)),
];
/// (alpha, beta, z, E_{alpha,beta}(z)) from a high-precision Taylor sum
pub const ML_TABLE: [(f64, f64, Complex64, Complex64); 105] = [
    (2.999999999999999889e-1, 1.0, c(-4.1984595802325636038e-1, 3.1774176511570657588), c(7.3399603469649022102e-2, 2.2259980038523788298e-1)),
    (2.999999999999999889e-1, 1.0, c(-8.2025997532243899446e-1, -1.1266107229753630214), c(3.3956487866470981133e-1, -2.4554405312643868737e-1)),
    (2.999999999999999889e-1, 1.0, c(-2.4985846512589824364, 2.8339522053492820497), c(1.3656771579742692507e-1, 1.2276661909786241203e-1)),
    (2.999999999999999889e-1, 5.0e-1, c(-2.0612619928404682379e-1, -1.7751453563930339463), c(2.1518233287980673399e-2, -1.5384249881940114779e-1)),
    (2.999999999999999889e-1, 5.0e-1, c(-2.9043359934065993144, 2.0746659157866624845), c(5.2689988431790444765e-2, 3.768042181690389405e-2)),
    (2.999999999999999889e-1, 5.0e-1, c(-6.6107183332444097168e-1, -2.1450687103772408948e-1), c(2.5194035658669497916e-1, -4.923283211666560968e-2)),
    (2.999999999999999889e-1, 1.6999999999999999556, c(5.8355927158007803168e-1, -1.8175095118224902091), c(1.2760855045699459715e-1, -6.1425841466177985645e-1)),
    (2.999999999999999889e-1, 1.6999999999999999556, c(-1.3208271570609939616, -2.8854163033407149719), c(1.9167812470068966156e-1, -2.4153709463258476239e-1)),
    (2.999999999999999889e-1, 1.6999999999999999556, c(9.7801782873095488569e-2, -1.8696747401418895018e-1), c(1.1698281876527399683, -2.1636045951009713011e-1)),
    (2.999999999999999889e-1, -5.0e-1, c(4.0057306214509347253e-1, -1.2044788705323294931), c(-1.9658425114243520746e-2, 3.2320790871325650698e-1)),
    (2.999999999999999889e-1, -5.0e-1, c(-5.4677937229945616782e-1, -2.1355987204322781636), c(-3.0807114365762630923e-2, 9.4674917372643444978e-2)),
    (2.999999999999999889e-1, -5.0e-1, c(3.6810856202706090379, 3.5361862116091402619), c(2.6923905600899258818e-2, -1.7490367868216341675e-2)),
    (2.999999999999999889e-1, 2.5, c(2.7051377763373101182, -2.7254954453263069425), c(-1.4591658181482907174e-1, -2.5087090576881903148e-1)),
    (2.999999999999999889e-1, 2.5, c(-2.6225812173174278819, 4.1460384436569857058), c(1.0927952648617765451e-1, 1.1963375819628123345e-1)),
    (2.999999999999999889e-1, 2.5, c(3.2384170653649768656e-1, 1.2898866002380842133), c(3.3858126928630980893e-1, 4.954419267320162131e-1)),
    (5.0e-1, 1.0, c(1.3465869359791080129e+1, 6.4841551467480842419), c(1.6588954654049353252e+60, -5.9666299167170903408e+60)),
    (5.0e-1, 1.0, c(4.2170801234908541488, -4.1084523555853396104), c(-4.9886171459406026308, 3.9707935033178327521e-1)),
    (5.0e-1, 1.0, c(1.2890457181396588027e+1, 2.8148842329766798898), c(-1.0050825757352191612e+69, -3.2601456815130698935e+68)),
    (5.0e-1, 5.0e-1, c(5.744914938324050091, 1.362783119444345914e+1), c(-9.0021381678360132751e-4, -9.3222864083711075538e-4)),
    (5.0e-1, 5.0e-1, c(6.533319657611789566, 1.1176683538455090883e+1), c(-8.1778238766706038462e-4, -1.4794658114943564501e-3)),
    (5.0e-1, 5.0e-1, c(2.8468613392211996604, -5.2572239825874493846), c(-4.1555203303928984388e-3, 6.9144584675956883636e-3)),
    (5.0e-1, 1.6999999999999999556, c(4.7915528275982213202, 1.4389419502384789951e+1), c(-1.9954728488978705683e-2, 7.0110854267664546033e-2)),
    (5.0e-1, 1.6999999999999999556, c(-5.329154251109097018, -3.63782360853271447), c(1.3240773058693603218e-1, -7.8811402644668485865e-2)),
    (5.0e-1, 1.6999999999999999556, c(1.3561542085485518427, 6.451294970031147713), c(-1.7221246449747582293e-2, 1.6828412480187957902e-1)),
    (5.0e-1, -5.0e-1, c(-3.8174932633680316307, 3.632419762711764033), c(-2.0711313097999452442e-3, -1.4923006171478709062e-2)),
    (5.0e-1, -5.0e-1, c(1.5025151904447351381, 1.1400262700400882743), c(2.1402277278333825798e+1, -2.7546113754165912917e+1)),
    (5.0e-1, -5.0e-1, c(-1.0012103260688812512e+1, -4.1309306354287027574), c(-2.5557328151157823657e-3, 2.4683256574830224913e-3)),
    (5.0e-1, 2.5, c(5.0404718132218127025, 9.1672021843054363188), c(-3.9639987894325048556e-2, 9.2370118348232399275e-2)),
    (5.0e-1, 2.5, c(1.6666056125812420685, 1.1176061731664578502e+1), c(-4.3308751654255342755e-3, 8.9463568714922689654e-2)),
    (5.0e-1, 2.5, c(-1.0983216793426002766e+1, 1.7303869094203430112), c(8.077669668012981565e-2, 1.1497884407214176652e-2)),
    (7.5e-1, 1.0, c(2.0774394203417021032e+1, -3.5414208754486224962e+1), c(1.1977891657737801941e+11, -1.9850493393899615599e+11)),
    (7.5e-1, 1.0, c(-2.3222512873632496166e+1, 7.5295772167654630991), c(1.1140844287006636697e-2, 3.7764119023537893903e-3)),
    (7.5e-1, 1.0, c(7.1135072440325286536, -8.6664317999135551673), c(-7.3200505606488694714e+3, 1.8395611296143092435e+4)),
    (7.5e-1, 5.0e-1, c(5.1699126233336141212, 3.435926975697163499e+1), c(8.7794565404114434398e-4, -5.8135089113530675622e-3)),
    (7.5e-1, 5.0e-1, c(-1.8413796160536925584e+1, -5.4224559413330322144), c(-1.015846270727359329e-2, 2.9557206869012223046e-3)),
    (7.5e-1, 5.0e-1, c(-2.9792133685912482122e+1, 1.7421308988388165773e+1), c(-5.1034936608017388261e-3, -2.974536910090720548e-3)),
    (7.5e-1, 1.6999999999999999556, c(1.7485628453005712668, 4.0057314525027415186e+1), c(-9.2018960152714817065e-4, 2.4173019612131174073e-2)),
    (7.5e-1, 1.6999999999999999556, c(-5.1669223694620178833, 3.8852117225191726391e+1), c(3.3994619357120012497e-3, 2.4487363197544452633e-2)),
    (7.5e-1, 1.6999999999999999556, c(8.420610263452728006, 8.3522913259524678153), c(-9.0872139113516416088e+4, -6.6221394347804146938e+4)),
    (7.5e-1, -5.0e-1, c(1.4735483753831379872e+1, 1.4179046172361335465e+1), c(1.3529163284884810219e+15, -2.2907653674574544902e+15)),
    (7.5e-1, -5.0e-1, c(-2.3832315542375532402e+1, -1.4426293639328820362e+1), c(7.8377737059146702881e-3, -4.6890843587392395897e-3)),
    (7.5e-1, -5.0e-1, c(1.5209545705859154552e+1, -3.5534710049895380735e+1), c(7.5145936668305114532e+3, -1.3407913186064301834e+4)),
    (7.5e-1, 2.5, c(1.4065939164186685773e+1, -1.3904807159959373664e+1), c(1.681628468389955105e+9, -1.0878096742082585508e+9)),
    (7.5e-1, 2.5, c(-6.2523799194798257428e-1, -3.5013472866014900831), c(1.2880702233426654605e-1, -2.6884907721386366485e-1)),
    (7.5e-1, 2.5, c(-2.2079069647852733738e+1, 2.4511159005428551083), c(4.6728280462380545718e-2, 4.9685502951580989714e-3)),
    (1.0, 1.0, c(-1.225206314516932693e+1, -2.8628694534433009267e+1), c(-4.4785615455992799446e-6, 1.6569696712448925161e-6)),
    (1.0, 1.0, c(-1.2024269763345388995e+1, -4.5685872362067883046), c(-8.5939400882514565555e-7, 5.934990878570956676e-6)),
    (1.0, 1.0, c(3.7398946813996793992e+1, 1.3481337102373467829e+1), c(1.0650153171530521285e+16, 1.384135475049328495e+16)),
    (1.0, 5.0e-1, c(-4.1113322720591526149e+1, -1.3750290022124984191e+1), c(-6.3586058273432294361e-3, 2.211201873568517297e-3)),
    (1.0, 5.0e-1, c(-9.3621225193994928038e-1, 2.0046787817356555905e+1), c(-7.4012014923170513973e-1, 1.5788526116635546303)),
    (1.0, 5.0e-1, c(1.6453740567830937636e+1, 3.1668624926703127898e+1), c(5.8310196349757183377e+7, 5.985973837864927061e+7)),
    (1.0, 1.6999999999999999556, c(2.5830884195739635345e+1, -2.5753159734786429169e+1), c(1.3295134505921166129e+10, -9.5482479584291308901e+8)),
    (1.0, 1.6999999999999999556, c(-3.2720459951600211923e+1, -2.3095936092947358276e+1), c(1.5761531884449256278e-2, -1.123280201005608296e-2)),
    (1.0, 1.6999999999999999556, c(-3.1315321402556122621e+1, -5.2360358466790601906e-1), c(2.484001299491468644e-2, -4.1964270495812214371e-4)),
    (1.0, -5.0e-1, c(-1.5888599822285502938e+1, -2.7707663945677165174e+1), c(5.9661639919580696435e-3, -1.235807531344925938e-2)),
    (1.0, -5.0e-1, c(-1.2641305615835610965e+1, 7.2290040162439250793), c(2.7412791633224341382e-2, 2.009726555336298189e-2)),
    (1.0, -5.0e-1, c(-1.545598900810814591e+1, 9.896333405394894811), c(2.0499330277904529539e-2, 1.6003478736050252855e-2)),
    (1.0, 2.5, c(-2.3984599322894702311e+1, -1.2158311558383063655e+1), c(3.6964825087781927038e-2, -1.8328637823557329062e-2)),
    (1.0, 2.5, c(2.3935332011072123493e+1, -1.2097738939380080936e+1), c(6.9651085432668225053e+7, 1.6465482255382633134e+8)),
    (1.0, 2.5, c(-3.5839956625746928864e+1, -1.9532116710976172413e+1), c(2.4090470609066482554e-2, -1.2940152498585275431e-2)),
    (1.25, 1.0, c(3.8346949969250246681e+1, -2.3144375189257672787e+1), c(-1.1611869570923962541e+8, -8.1514455249313832379e+7)),
    (1.25, 1.0, c(1.3785620910164615438e+1, 1.6357553099774090555e+1), c(2.362504527449081179e+3, 5.3279807691579939819e+3)),
    (1.25, 1.0, c(-2.9532042177928330418, 1.3146890665985566216e+1), c(-1.9275670417908748202e-1, 2.3729996083799015798)),
    (1.25, 5.0e-1, c(1.8043931673171542229e+1, 4.9413764291872874779), c(-4.607803028872368675e+4, 4.9843431091416832783e+4)),
    (1.25, 5.0e-1, c(-3.2370415444301372077e+1, -2.0247217094502353518e+1), c(-4.6202967336981648254e-3, 3.3719405276770722935e-3)),
    (1.25, 5.0e-1, c(4.5388567479165162766, -1.293760002103785034e+1), c(1.1099947731197963091e+2, -1.6742707400441544908e+2)),
    (1.25, 1.6999999999999999556, c(1.391423056508381606, 9.9236512973399939597), c(7.0854106157935437471e-1, -2.8540134005614337207)),
    (1.25, 1.6999999999999999556, c(6.8301425106922284414, 1.5863558526370814761e+1), c(3.411964546036661327e+1, 4.3409253222700130546e+1)),
    (1.25, 1.6999999999999999556, c(3.0958756618952726569e+1, -1.6109579382188886854e+1), c(8.7389976488558957998e+5, 1.1392762956191461301e+5)),
    (1.25, -5.0e-1, c(2.913536032043618107e+1, -7.0281073369656406058), c(-1.4164998050200342332e+8, 5.4347741127260881184e+4)),
    (1.25, -5.0e-1, c(-1.2213999885335804496, -5.8985021138558677012e-2), c(-3.4125417819169715963e-1, 2.2240924743421917376e-2)),
    (1.25, -5.0e-1, c(2.4709466781442674943e+1, -2.8588756709009150114e+1), c(8.6060190339925774015e+7, -3.9884770453587375569e+6)),
    (1.25, 2.5, c(1.0364496404505871396e+1, -2.3559277858305552655e+1), c(-5.2757684780543662839e+1, -4.092257081318710709)),
    (1.25, 2.5, c(3.0305299887049854668, 1.5214107277140607621e+1), c(1.7318218156631135752, 1.6566661293121384494e-1)),
    (1.25, 2.5, c(-2.1937942249118844273e+1, 9.0640298374733099251), c(4.2973354160831548994e-2, 1.7775971698112478963e-2)),
    (1.5, 1.0, c(1.691015106378748456e+1, 1.6634967604889762782e+1), c(-5.0716988832638477205e+2, -7.0488430452207961311e+2)),
    (1.5, 1.0, c(-1.4561561646760358357e+1, 3.3467580561698731856e+1), c(-3.3338179582010408761, -9.5878575988977468503)),
    (1.5, 1.0, c(-2.1746549492209140908e+1, 2.7748922257088089793e+1), c(-4.400070843199637888e-1, -1.5271397350196453758)),
    (1.5, 5.0e-1, c(1.5130014910769229886e+1, 1.2760335003492652817e+1), c(-1.1484133800785592897e+3, -4.6769624595436222075e+2)),
    (1.5, 5.0e-1, c(1.4457905095556271569, 1.8225015122579649174e-1), c(2.7637338064402789409, 3.9654419196209700254e-1)),
    (1.5, 5.0e-1, c(2.1718261471053699196, -1.1984753102916403389), c(3.6860113567944502132, -3.5294242450017963904)),
    (1.5, 1.6999999999999999556, c(-2.9267826240892707013, 1.2491562114979970488e+1), c(-6.2549305718925532223e-1, -1.3127561218622859759)),
    (1.5, 1.6999999999999999556, c(1.4327226094467237161e+1, 2.9296497590369476427e+1), c(2.3816580754634007674e+2, 2.5997742849652519705e+1)),
    (1.5, 1.6999999999999999556, c(-5.2145260838003073545, -1.1743153305638296402e+1), c(-2.306841700738898011e-1, 7.1325503114180850809e-1)),
    (1.5, -5.0e-1, c(-3.5904255166067757798, 1.0958411272344134701e+1), c(3.3111702677799051506e+1, 1.6446588385562358762e+1)),
    (1.5, -5.0e-1, c(1.340095126547745652, 1.4080640581294250335), c(-3.0416763166222772958e-1, 4.9847263090660013097)),
    (1.5, -5.0e-1, c(-2.2625308080235200237e+1, -1.626651639161872609e+1), c(4.2172927640724381067, 5.4514411246040776702)),
    (1.5, 2.5, c(-3.180832493866346411e+1, 1.2829770385775132624e+1), c(2.770188678599771931e-2, 1.2156849628636111705e-2)),
    (1.5, 2.5, c(-5.3157311084345328922, -4.1467176303911612578), c(1.5279960122239286844e-1, -1.6671082151095532359e-1)),
    (1.5, 2.5, c(1.7130255890661832296e+1, -3.2652814335909027932e+1), c(7.2097178983905392333e+1, 1.6747271447832141398)),
    (2.0, 1.0, c(5.5278255669850535625, 2.1692831699466754714e+1), c(-2.0382058975985757761e+1, 4.9454524038456920532)),
    (2.0, 1.0, c(2.456212991016406022e+1, -2.5071175579746714845e+1), c(-7.8029886311620030483e+1, -8.817959448951706294e+1)),
    (2.0, 1.0, c(4.8993919907819520887, -3.9361260010975218648), c(3.613583111241716866, -3.8996230248656945033)),
    (2.0, 5.0e-1, c(9.888631586566654974, 2.3860892760306793292e+1), c(-7.7133765457817561847e+1, 1.8789954350358620752)),
    (2.0, 5.0e-1, c(-2.1327806766648258474e+1, 1.7624178330846255847e+1), c(5.3004888939438766181, -4.4124560223117381586)),
    (2.0, 5.0e-1, c(-2.0098708575754272943e+1, 8.2908672070028259782), c(1.7047540199398256451, -1.9541185164707013258)),
    (2.0, 1.6999999999999999556, c(-1.63231048926661515e+1, -7.6950765144872184109), c(-5.3889507064327728511e-1, 4.910726125023698792e-2)),
    (2.0, 1.6999999999999999556, c(-1.2458232154929953506, -3.1848727357123596704e+1), c(-6.9662231468183526221, 2.6639497100584576265)),
    (2.0, 1.6999999999999999556, c(4.1310844270837208114, 3.42056700087571528e+1), c(-1.1361184697783258806e+1, -2.8421679777896692606)),
    (2.0, -5.0e-1, c(-3.401256948896185861e+1, 2.0158393446354921252e+1), c(-8.0832958671595506469, 4.0125760192245276485e+1)),
    (2.0, -5.0e-1, c(-6.5318588138206941096, -1.1324357300791199066e+1), c(2.9400172906359533655e-1, 2.0997695463671423662e+1)),
    (2.0, -5.0e-1, c(2.3941162730555092253e+1, -2.4984655638844204262), c(6.8939552410189327426e+2, -2.3839113220096444247e+2)),
    (2.0, 2.5, c(-6.1119010790788355081, 2.5481630324945488297e+1), c(-9.06028153016444118e-1, 4.907283643762521739e-1)),
    (2.0, 2.5, c(-8.8681463113668534959, 1.3533825781661397158e+1), c(-1.1814824424673592506e-1, 4.1730435988030751291e-1)),
    (2.0, 2.5, c(2.2075272745621731474e+1, 1.8365145375586870102e+1), c(1.6389342553245605478, 6.0118659810250203308)),
];
/// (alpha, beta, z, E_{alpha,beta}(z)) for |z| > 50 from closed forms
pub const ML_LARGE_TABLE: [(f64, f64, Complex64, Complex64); 23] = [
    (1.0, 1.0, c(5.73201893475363633e+1, 1.7731212399680373437e+1), c(3.423695348196160597e+24, -7.0434260331109017371e+24)),
    (2.0, 1.0, c(5.73201893475363633e+1, 1.7731212399680373437e+1), c(4.2560853375026501009e+2, 9.7058986233088084907e+2)),
    (2.0, 2.0, c(5.73201893475363633e+1, 1.7731212399680373437e+1), c(7.3053815594674299965e+1, 1.1568465642522029302e+2)),
    (5.0e-1, 1.0, c(-3.1211012741035677465e+1, 6.8197307011926127984e+1), c(3.1311183246131541051e-3, 6.8404018935935755864e-3)),
    (5.0e-1, 5.0e-1, c(-3.1211012741035677465e+1, 6.8197307011926127984e+1), c(-3.2778397797066024014e-5, 3.7967019557382518943e-5)),
    (1.0, 1.0, c(-3.1211012741035677465e+1, 6.8197307011926127984e+1), c(1.693807186623945458e-14, -2.213976716855823175e-14)),
    (2.0, 1.0, c(-3.1211012741035677465e+1, 6.8197307011926127984e+1), c(2.8903073415987838979e+1, 4.542131684922267125e+1)),
    (2.0, 2.0, c(-3.1211012741035677465e+1, 6.8197307011926127984e+1), c(6.2170251646593944828, 2.6393326666664202738e-2)),
    (5.0e-1, 1.0, c(4.3482930537200836341e+1, -1.1184469031606715816e+2), c(-1.7038003331262626117e-3, -4.3821284344162736624e-3)),
    (5.0e-1, 5.0e-1, c(4.3482930537200836341e+1, -1.1184469031606715816e+2), c(-1.444565935297498045e-5, 1.3234300103423589707e-5)),
    (1.0, 1.0, c(4.3482930537200836341e+1, -1.1184469031606715816e+2), c(2.3970594197141540283e+18, 7.2784012315631139422e+18)),
    (2.0, 1.0, c(4.3482930537200836341e+1, -1.1184469031606715816e+2), c(4.2013358933701653502e+3, 4.1236229108316071257e+2)),
    (2.0, 2.0, c(4.3482930537200836341e+1, -1.1184469031606715816e+2), c(2.9528405676224610678e+2, 2.4762444793400738512e+2)),
    (5.0e-1, 1.0, c(-5.4449587313024501611e+1, 7.7616004432926972711), c(1.0153791318276174595e-2, 1.4469097585911375953e-3)),
    (5.0e-1, 5.0e-1, c(-5.4449587313024501611e+1, 7.7616004432926972711), c(8.9501181362058310999e-5, 2.6031962558547756148e-5)),
    (1.0, 1.0, c(-5.4449587313024501611e+1, 7.7616004432926972711), c(2.0787886435119741849e-25, 2.2438243143035597124e-24)),
    (2.0, 1.0, c(-5.4449587313024501611e+1, 7.7616004432926972711), c(5.027273557175102955e-1, 4.9281353984895094066e-1)),
    (2.0, 2.0, c(-5.4449587313024501611e+1, 7.7616004432926972711), c(1.4004355065374771127e-1, -2.2773159441544376293e-2)),
    (5.0e-1, 1.0, c(1.2432199365413288206e+2, 1.5666538192549668906e+2), c(-1.7535612246153100708e-3, 2.2097093431250052568e-3)),
    (5.0e-1, 5.0e-1, c(1.2432199365413288206e+2, 1.5666538192549668906e+2), c(-1.6020760191371242793e-6, -6.868050634195347061e-6)),
    (1.0, 1.0, c(1.2432199365413288206e+2, 1.5666538192549668906e+2), c(8.994465143760605926e+53, -3.9548153152177077118e+53)),
    (2.0, 1.0, c(1.2432199365413288206e+2, 1.5666538192549668906e+2), c(1.6811123975558865916e+5, -2.2293738848340130193e+4)),
    (2.0, 2.0, c(1.2432199365413288206e+2, 1.5666538192549668906e+2), c(1.001816659464008711e+4, -6.5900179587923184346e+3)),
];
