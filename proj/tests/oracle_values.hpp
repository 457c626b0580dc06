#pragma once
// Generated by gen_oracles.py (mpmath, 50 digits). Do not edit.
namespace oracle {
struct MlPoint { double p, q, theta, value; };
inline constexpr MlPoint ml_table[] = {
    {0.05, 0.3, -700.0, 0.00039357830315582549201},
    {0.05, 0.3, -60.0, 0.0045371570377578130227},
    {0.05, 0.3, -20.0, 0.013265675567573337908},
    {0.05, 0.3, -5.0, 0.047584072187162696482},
    {0.05, 0.3, -1.0, 0.15249231152360132268},
    {0.05, 0.3, -0.25, 0.25805146790357839538},
    {0.05, 0.3, 0.5, 0.78395061417762732943},
    {0.05, 1.0, -700.0, 0.0013831011871801276297},
    {0.05, 1.0, -60.0, 0.015902588179310102892},
    {0.05, 1.0, -20.0, 0.046243080841732156396},
    {0.05, 1.0, -5.0, 0.16250645664934868986},
    {0.05, 1.0, -1.0, 0.49278415120025197967},
    {0.05, 1.0, -0.25, 0.79553980941940649536},
    {0.05, 1.0, 0.5, 2.047887820610823959},
    {0.05, 1.5, -700.0, 0.0016107027168761597833},
    {0.05, 1.5, -60.0, 0.018510366526190389006},
    {0.05, 1.5, -20.0, 0.053770966325028416147},
    {0.05, 1.5, -5.0, 0.18822669009138169739},
    {0.05, 1.5, -1.0, 0.56470700439260992986},
    {0.05, 1.5, -0.25, 0.90315901346320681348},
    {0.05, 1.5, 0.5, 2.2453447559496922757},
    {0.05, 2.5, -700.0, 0.0011107729733880042491},
    {0.05, 2.5, -60.0, 0.012758317583035196739},
    {0.05, 2.5, -20.0, 0.037020672018438282143},
    {0.05, 2.5, -5.0, 0.12904877391549318636},
    {0.05, 2.5, -1.0, 0.38274009120983508272},
    {0.05, 2.5, -0.25, 0.60603335082899400343},
    {0.05, 2.5, 0.5, 1.4519696972058993618},
    {0.1, 0.3, -700.0, 0.00031096388864904339622},
    {0.1, 0.3, -60.0, 0.0036012234911454531558},
    {0.1, 0.3, -20.0, 0.010628994549031198247},
    {0.1, 0.3, -5.0, 0.039467139132787467881},
    {0.1, 0.3, -1.0, 0.13779358571915161801},
    {0.1, 0.3, -0.25, 0.24868694880246508721},
    {0.1, 0.3, 0.5, 0.89050923864090961481},
    {0.1, 1.0, -700.0, 0.0013350760546906458684},
    {0.1, 1.0, -60.0, 0.015361233889930010455},
    {0.1, 1.0, -20.0, 0.04473386400745095983},
    {0.1, 1.0, -5.0, 0.15804238235845182791},
    {0.1, 1.0, -1.0, 0.48556446431108210159},
    {0.1, 1.0, -0.25, 0.79139588305083588686},
    {0.1, 1.0, 0.5, 2.0770042471194151855},
    {0.1, 1.5, -700.0, 0.001607815632309053345},
    {0.1, 1.5, -60.0, 0.018479792227863825463},
    {0.1, 1.5, -20.0, 0.053697288094944719452},
    {0.1, 1.5, -5.0, 0.18814300185164659944},
    {0.1, 1.5, -1.0, 0.56524094007420221114},
    {0.1, 1.5, -0.25, 0.90386699424973749073},
    {0.1, 1.5, 0.5, 2.2218574114048877724},
    {0.1, 2.5, -700.0, 0.0011483151714295832887},
    {0.1, 2.5, -60.0, 0.013183430274739412114},
    {0.1, 2.5, -20.0, 0.038217161730371615449},
    {0.1, 2.5, -5.0, 0.13272101867417621113},
    {0.1, 2.5, -1.0, 0.38936463984607146166},
    {0.1, 2.5, -0.25, 0.61026285570223567167},
    {0.1, 2.5, 0.5, 1.4012022699452005849},
    {0.25, 0.3, -700.0, 0.000073722408956517821032},
    {0.25, 0.3, -60.0, 0.00090246167322503606934},
    {0.25, 0.3, -20.0, 0.0029641494556212820474},
    {0.25, 0.3, -5.0, 0.015265920351956243541},
    {0.25, 0.3, -1.0, 0.092806942823066427664},
    {0.25, 0.3, -0.25, 0.22068202897818348445},
    {0.25, 0.3, 0.5, 1.1217349735748129758},
    {0.25, 0.3, 2.0, 247545872.6735933274},
    {0.25, 1.0, -700.0, 0.0011646335955245269143},
    {0.25, 1.0, -60.0, 0.013445372990850391285},
    {0.25, 1.0, -20.0, 0.039426390446653064471},
    {0.25, 1.0, -5.0, 0.14279894642587369523},
    {0.25, 1.0, -1.0, 0.46385276080171328694},
    {0.25, 1.0, -0.25, 0.78090342282538168414},
    {0.25, 1.0, 0.5, 2.0796142210090508739},
    {0.25, 1.0, 2.0, 35544441.509930781603},
    {0.25, 1.5, -700.0, 0.001574051062363635928},
    {0.25, 1.5, -60.0, 0.018113667903400301622},
    {0.25, 1.5, -20.0, 0.052761698542158495533},
    {0.25, 1.5, -5.0, 0.1863644881212023993},
    {0.25, 1.5, -1.0, 0.56711541212255054438},
    {0.25, 1.5, -0.25, 0.90750537048945597592},
    {0.25, 1.5, 0.5, 2.1119315813945289806},
    {0.25, 1.5, 2.0, 8886109.5758513697404},
    {0.25, 2.5, -700.0, 0.0012588339526918330659},
    {0.25, 2.5, -60.0, 0.01443734257699609159},
    {0.25, 2.5, -20.0, 0.041759791600171408998},
    {0.25, 2.5, -5.0, 0.14371932274202320338},
    {0.25, 2.5, -1.0, 0.40941161821472508453},
    {0.25, 2.5, -0.25, 0.62292468946129786087},
    {0.25, 2.5, 0.5, 1.2670963696227844306},
    {0.25, 2.5, 2.0, 555380.95065379562059},
    {0.3, 0.3, -700.0, 0.00000047087495527148750013},
    {0.3, 0.3, -60.0, 0.000062953864923744638251},
    {0.3, 0.3, -20.0, 0.00054462489804465207853},
    {0.3, 0.3, -5.0, 0.007275100803154911655},
    {0.3, 0.3, -1.0, 0.077316799030089672914},
    {0.3, 0.3, -0.25, 0.21141676594025952185},
    {0.3, 0.3, 0.5, 1.1694769581219357611},
    {0.3, 0.3, 2.0, 400586.43366882275972},
    {0.3, 1.0, -700.0, 0.0010996276633052981041},
    {0.3, 1.0, -60.0, 0.012714990320585849557},
    {0.3, 1.0, -20.0, 0.037406226213884453058},
    {0.3, 1.0, -5.0, 0.13708086902027063889},
    {0.3, 1.0, -1.0, 0.45659440832969067062},
    {0.3, 1.0, -0.25, 0.77807454640151807201},
    {0.3, 1.0, 0.5, 2.0620157899559994895},
    {0.3, 1.0, 2.0, 79485.907625183568623},
    {0.3, 1.5, -700.0, 0.0015539842339399020195},
    {0.3, 1.5, -60.0, 0.01789521818224244802},
    {0.3, 1.5, -20.0, 0.052198626571391979356},
    {0.3, 1.5, -5.0, 0.18524257891187128076},
    {0.3, 1.5, -1.0, 0.56789471905343601463},
    {0.3, 1.5, -0.25, 0.90922381019373373807},
    {0.3, 1.5, 0.5, 2.0698637836191732301},
    {0.3, 1.5, 2.0, 25035.768767242071364},
    {0.3, 2.5, -700.0, 0.0012944580027891008969},
    {0.3, 2.5, -60.0, 0.014843004137062875349},
    {0.3, 2.5, -20.0, 0.042914032539029574343},
    {0.3, 2.5, -5.0, 0.14737731720994940246},
    {0.3, 2.5, -1.0, 0.41618758706077358841},
    {0.3, 2.5, -0.25, 0.62712794452298540636},
    {0.3, 2.5, 0.5, 1.2290016034530696984},
    {0.3, 2.5, 2.0, 2482.98008588524868},
    {0.5, 0.3, -700.0, -0.00024493244507161060742},
    {0.5, 0.3, -60.0, -0.0027972027962534866147},
    {0.5, 0.3, -20.0, -0.007981234892737619633},
    {0.5, 0.3, -5.0, -0.024054156777053257358},
    {0.5, 0.3, -1.0, 0.011118455664361185677},
    {0.5, 0.3, -0.25, 0.17524763142702920563},
    {0.5, 0.3, 0.5, 1.2567908036072408236},
    {0.5, 0.3, 2.0, 288.2820642347493186},
    {0.5, 0.3, 10.0, 1350448994967252941300000000000000000000000000.0},
    {0.5, 1.0, -700.0, 0.00080598429692265993529},
    {0.5, 1.0, -60.0, 0.0094018542751763885888},
    {0.5, 1.0, -20.0, 0.028174348741051319319},
    {0.5, 1.0, -5.0, 0.11070463773306862637},
    {0.5, 1.0, -1.0, 0.42758357615580700441},
    {0.5, 1.0, -0.25, 0.77034654773099674392},
    {0.5, 1.0, 0.5, 1.9523604891825570933},
    {0.5, 1.0, 2.0, 108.94090438997797241},
    {0.5, 1.0, 10.0, 53762342836322708968000000000000000000000000.0},
    {0.5, 1.5, -700.0, 0.0014274200224329676287},
    {0.5, 1.5, -60.0, 0.016509969095413726857},
    {0.5, 1.5, -20.0, 0.048591282562947434034},
    {0.5, 1.5, -5.0, 0.17785907245338627473},
    {0.5, 1.5, -1.0, 0.57241642384419299559},
    {0.5, 1.5, -0.25, 0.91861380907601302433},
    {0.5, 1.5, 0.5, 1.9047209783651141866},
    {0.5, 1.5, 2.0, 53.970452194988986206},
    {0.5, 1.5, 10.0, 5376234283632270896800000000000000000000000.0},
    {0.5, 2.5, -700.0, 0.0014262715270467896335},
    {0.5, 2.5, -60.0, 0.016357814111666639209},
    {0.5, 2.5, -20.0, 0.04730053028866858715},
    {0.5, 2.5, -5.0, 0.16197919621431494803},
    {0.5, 2.5, -1.0, 0.44403725674868042169},
    {0.5, 2.5, -0.25, 0.64375427168800720699},
    {0.5, 2.5, 0.5, 1.1053672450784064506},
    {0.5, 2.5, 2.0, 12.710518256973368408},
    {0.5, 2.5, 10.0, 53762342836322708968000000000000000000000.0},
    {0.7, 0.3, -700.0, -0.00038392628098584708819},
    {0.7, 0.3, -60.0, -0.0045037574486346804142},
    {0.7, 0.3, -20.0, -0.013641213267888994699},
    {0.7, 0.3, -5.0, -0.053574036259658449337},
    {0.7, 0.3, -1.0, -0.065339225551408818873},
    {0.7, 0.3, -0.25, 0.14206687496957033163},
    {0.7, 0.3, 0.5, 1.2467652809897917746},
    {0.7, 0.3, 2.0, 42.26713901552810553},
    {0.7, 0.3, 10.0, 6392956732430.5062852},
    {0.7, 0.3, 40.0, 150038488479069477520000000000000000000000000000000000000000000000000000000000000000000.0},
    {0.7, 1.0, -700.0, 0.00047808096977882350434},
    {0.7, 1.0, -60.0, 0.0056462751668804214355},
    {0.7, 1.0, -20.0, 0.01739569829160397999},
    {0.7, 1.0, -5.0, 0.077569357764769809981},
    {0.7, 1.0, -1.0, 0.39961197811559939027},
    {0.7, 1.0, -0.25, 0.76882351037848087112},
    {0.7, 1.0, 0.5, 1.8249850568512024814},
    {0.7, 1.0, 2.0, 20.966433131481956304},
    {0.7, 1.0, 10.0, 639295673243.01708451},
    {0.7, 1.0, 40.0, 3750962211976735840700000000000000000000000000000000000000000000000000000000000000000.0},
    {0.7, 1.5, -700.0, 0.0012268375769852168785},
    {0.7, 1.5, -60.0, 0.014285143288769219709},
    {0.7, 1.5, -20.0, 0.042648396330864478195},
    {0.7, 1.5, -5.0, 0.16503730435180126514},
    {0.7, 1.5, -1.0, 0.58078983706020868394},
    {0.7, 1.5, -0.25, 0.93188060976154718652},
    {0.7, 1.5, 0.5, 1.7612328143349915156},
    {0.7, 1.5, 2.0, 12.414424420257593877},
    {0.7, 1.5, 10.0, 123428670441.43739163},
    {0.7, 1.5, 40.0, 269038308465737056100000000000000000000000000000000000000000000000000000000000000000.0},
    {0.7, 2.5, -700.0, 0.0015316722435136816972},
    {0.7, 2.5, -60.0, 0.017604643705312007836},
    {0.7, 2.5, -20.0, 0.051113511741267016862},
    {0.7, 2.5, -5.0, 0.17662967825054686285},
    {0.7, 2.5, -1.0, 0.47350726699699924473},
    {0.7, 2.5, -0.25, 0.65983726541593474074},
    {0.7, 2.5, 0.5, 1.0169888903986896296},
    {0.7, 2.5, 2.0, 3.9300950735031117453},
    {0.7, 2.5, 10.0, 4600919368.3281674188},
    {0.7, 2.5, 40.0, 1384066615362309045300000000000000000000000000000000000000000000000000000000000000.0},
    {0.9, 0.3, -700.0, -0.00038728693838895912064},
    {0.9, 0.3, -60.0, -0.0046301438352631302451},
    {0.9, 0.3, -20.0, -0.014711736799611870558},
    {0.9, 0.3, -5.0, -0.079149673577254660555},
    {0.9, 0.3, -1.0, -0.15528505157518683712},
    {0.9, 0.3, -0.25, 0.11458841267855656912},
    {0.9, 0.3, 0.5, 1.1940159450981493593},
    {0.9, 0.3, 2.0, 16.601512318442229089},
    {0.9, 0.3, 10.0, 2708096.8892568549731},
    {0.9, 0.3, 40.0, 2915085297394301218600000000.0},
    {0.9, 1.0, -700.0, 0.00015051922633911709624},
    {0.9, 1.0, -60.0, 0.0018022340312846145754},
    {0.9, 1.0, -20.0, 0.0057495078161091125836},
    {0.9, 1.0, -5.0, 0.034431324804098418323},
    {0.9, 1.0, -1.0, 0.37606602142464187902},
    {0.9, 1.0, -0.25, 0.77386953164960228531},
    {0.9, 1.0, 0.5, 1.7043087220993991136},
    {0.9, 1.0, 2.0, 9.6049277845715006791},
    {0.9, 1.0, 10.0, 451737.77456773740187},
    {0.9, 1.0, 40.0, 165426319383664602240000000.0},
    {0.9, 1.5, -700.0, 0.00095976508285397524997},
    {0.9, 1.5, -60.0, 0.011256919143206441013},
    {0.9, 1.5, -20.0, 0.034180104731423816771},
    {0.9, 1.5, -5.0, 0.14474048044025213054},
    {0.9, 1.5, -1.0, 0.59595802527072791312},
    {0.9, 1.5, -0.25, 0.94852709893725142148},
    {0.9, 1.5, 0.5, 1.6427066600516884006},
    {0.9, 1.5, 2.0, 6.2615992099617152035},
    {0.9, 1.5, 10.0, 125698.65669752912101},
    {0.9, 1.5, 40.0, 21309402794961163319000000.0},
    {0.9, 2.5, -700.0, 0.0015972486511113704416},
    {0.9, 2.5, -60.0, 0.018438117330182979218},
    {0.9, 2.5, -20.0, 0.054010684737158897934},
    {0.9, 2.5, -5.0, 0.19165696482684436636},
    {0.9, 2.5, -1.0, 0.50488918457121019234},
    {0.9, 2.5, -0.25, 0.67499850105423820642},
    {0.9, 2.5, 0.5, 0.95252484648567772847},
    {0.9, 2.5, 2.0, 2.2993854233832959161},
    {0.9, 2.5, 10.0, 9732.2760593902162198},
    {0.9, 2.5, 40.0, 353593783866654437940000.0},
    {0.95, 0.3, -700.0, -0.00036558319424206639774},
    {0.95, 0.3, -60.0, -0.004380435272382884764},
    {0.95, 0.3, -20.0, -0.014013903578151727333},
    {0.95, 0.3, -5.0, -0.084580979151659606205},
    {0.95, 0.3, -1.0, -0.17968664849156399719},
    {0.95, 0.3, -0.25, 0.10894689064907245327},
    {0.95, 0.3, 0.5, 1.1775138271399792397},
    {0.95, 0.3, 2.0, 14.037654750967913763},
    {0.95, 0.3, 10.0, 458774.41917474817373},
    {0.95, 0.3, 40.0, 19813029616219541634000.0},
    {0.95, 1.0, -700.0, 0.00007356643992798961513},
    {0.95, 1.0, -60.0, 0.00088353587298574871235},
    {0.95, 1.0, -20.0, 0.0028432225780766325644},
    {0.95, 1.0, -5.0, 0.02126843729173112133},
    {0.95, 1.0, -1.0, 0.37157362003067881398},
    {0.95, 1.0, -0.25, 0.77614254356978774788},
    {0.95, 1.0, 0.5, 1.6760890928135578307},
    {0.95, 1.0, 2.0, 8.3633442941936385341},
    {0.95, 1.0, 10.0, 84092.457677021251204},
    {0.95, 1.0, 40.0, 1307632276933932393500.0},
    {0.95, 1.5, -700.0, 0.00088449816334198171193},
    {0.95, 1.5, -60.0, 0.010388985491723056946},
    {0.95, 1.5, -20.0, 0.031657388691347405828},
    {0.95, 1.5, -5.0, 0.13806112660881827494},
    {0.95, 1.5, -1.0, 0.60121532735622970464},
    {0.95, 1.5, -0.25, 0.95311923349508325027},
    {0.95, 1.5, 0.5, 1.6166071977180872969},
    {0.95, 1.5, 2.0, 5.5518829475955435075},
    {0.95, 1.5, 10.0, 25028.812590781896878},
    {0.95, 1.5, 40.0, 187627357810043876700.0},
    {0.95, 2.5, -700.0, 0.0016058088405854733458},
    {0.95, 2.5, -60.0, 0.01856271007044005353},
    {0.95, 2.5, -20.0, 0.054538860549563278705},
    {0.95, 2.5, -5.0, 0.19555905398648595936},
    {0.95, 2.5, -1.0, 0.51301100809405358615},
    {0.95, 2.5, -0.25, 0.67860003497041351848},
    {0.95, 2.5, 0.5, 0.93920631200315595535},
    {0.95, 2.5, 2.0, 2.0951862036249148285},
    {0.95, 2.5, 10.0, 2217.1056662652805086},
    {0.95, 2.5, 40.0, 3862933435170122416.3},
    {1.0, 0.3, -60.0, -0.0040156500221427820853},
    {1.0, 0.3, -20.0, -0.012861586640416350889},
    {1.0, 0.3, -5.0, -0.089656736416004641586},
    {1.0, 0.3, -1.0, -0.2045876339118465691},
    {1.0, 0.3, -0.25, 0.10387535600231411894},
    {1.0, 0.3, 0.5, 1.1602160423178525746},
    {1.0, 0.3, 2.0, 12.073439681538224959},
    {1.0, 0.3, 10.0, 110393.85480229011658},
    {1.0, 0.3, 40.0, 3113302139179437626.6},
    {1.0, 1.0, -60.0, 0.0000000000000000000000000087565107626965203385},
    {1.0, 1.0, -20.0, 0.000000002061153622438557828},
    {1.0, 1.0, -5.0, 0.0067379469990854670966},
    {1.0, 1.0, -1.0, 0.3678794411714423216},
    {1.0, 1.0, -0.25, 0.77880078307140486825},
    {1.0, 1.0, 0.5, 1.6487212707001281468},
    {1.0, 1.0, 2.0, 7.3890560989306502272},
    {1.0, 1.0, 10.0, 22026.465794806716517},
    {1.0, 1.0, 40.0, 235385266837019985.41},
    {1.0, 1.5, -60.0, 0.0094835651617826503115},
    {1.0, 1.5, -20.0, 0.028975749535632584135},
    {1.0, 1.5, -5.0, 0.13055921188691678737},
    {1.0, 1.5, -1.0, 0.60715770584139372912},
    {1.0, 1.5, -0.25, 0.95785034580208694509},
    {1.0, 1.5, 0.5, 1.5917888456410335782},
    {1.0, 1.5, 2.0, 4.9871195441298132627},
    {1.0, 1.5, 10.0, 6965.3261301272240539},
    {1.0, 1.5, 40.0, 37217678542574058.727},
    {1.0, 2.5, -60.0, 0.01864826003222883206},
    {1.0, 2.5, -20.0, 0.054970170877993999488},
    {1.0, 2.5, -5.0, 0.1995639910417191573},
    {1.0, 2.5, -1.0, 0.52122146125411884478},
    {1.0, 2.5, -0.25, 0.68211528517370251523},
    {1.0, 2.5, 0.5, 0.92681935709104200852},
    {1.0, 2.5, 2.0, 1.9293701885171503444},
    {1.0, 2.5, 10.0, 696.41977509601285413},
    {1.0, 2.5, 40.0, 930441963564351.43997},
    {1.3, 0.3, -60.0, 0.00021107555777724217022},
    {1.3, 0.3, -20.0, 0.00020665715094271665802},
    {1.3, 0.3, -5.0, -0.15456456256964226979},
    {1.3, 0.3, -1.0, -0.34934081797093341038},
    {1.3, 0.3, -0.25, 0.086739763118876767261},
    {1.3, 0.3, 0.5, 1.0480447018649114845},
    {1.3, 0.3, 2.0, 6.1749268380051835222},
    {1.3, 0.3, 10.0, 949.09570490743425733},
    {1.3, 0.3, 40.0, 145936948.31756833351},
    {1.3, 1.0, -60.0, -0.0039739900718721056742},
    {1.3, 1.0, -20.0, -0.011841120110029619668},
    {1.3, 1.0, -5.0, -0.13275950847306692671},
    {1.3, 1.0, -1.0, 0.36894184906938253764},
    {1.3, 1.0, -0.25, 0.80180364574834731917},
    {1.3, 1.0, 0.5, 1.5022473445794166625},
    {1.3, 1.0, 2.0, 4.2917217536157314126},
    {1.3, 1.0, 10.0, 274.71183265837744361},
    {1.3, 1.0, 40.0, 20022466.37398050776},
    {1.3, 1.5, -60.0, 0.0035973444832885658297},
    {1.3, 1.5, -20.0, 0.01068122836033187471},
    {1.3, 1.5, -5.0, 0.063137534373177776619},
    {1.3, 1.5, -1.0, 0.65849218500639188107},
    {1.3, 1.5, -0.25, 0.98809121618738795757},
    {1.3, 1.5, 0.5, 1.4662781278827884692},
    {1.3, 1.5, 2.0, 3.1338507199161902102},
    {1.3, 1.5, 10.0, 113.27812135165763273},
    {1.3, 1.5, 40.0, 4845522.9248720486592},
    {1.3, 2.5, -60.0, 0.018179890254253529611},
    {1.3, 2.5, -20.0, 0.054716096203613516845},
    {1.3, 2.5, -5.0, 0.2287870864228819488},
    {1.3, 2.5, -1.0, 0.57120963281400380494},
    {1.3, 2.5, -0.25, 0.70116937872085643633},
    {1.3, 2.5, 0.5, 0.86826056433356193089},
    {1.3, 2.5, 2.0, 1.3614056363644145106},
    {1.3, 2.5, 10.0, 19.167006060575656169},
    {1.3, 2.5, 40.0, 283783.25910107779981},
    {1.7, 0.3, -700.0, 0.00049713152977867043102},
    {1.7, 0.3, -60.0, 0.25945812914004789732},
    {1.7, 0.3, -20.0, 0.68748520259995794635},
    {1.7, 0.3, -5.0, -0.86094520245115774726},
    {1.7, 0.3, -1.0, -0.44726496731192273857},
    {1.7, 0.3, -0.25, 0.098912532951423606582},
    {1.7, 0.3, 0.5, 0.89709131031552416927},
    {1.7, 0.3, 2.0, 3.4924185454842487901},
    {1.7, 0.3, 10.0, 73.097161368394382504},
    {1.7, 0.3, 40.0, 17085.485497523856216},
    {1.7, 1.0, -700.0, -0.00033188199748941500205},
    {1.7, 1.0, -60.0, -0.020439733504823577391},
    {1.7, 1.0, -20.0, 0.17585130935289226972},
    {1.7, 1.0, -5.0, -0.48659032255574780567},
    {1.7, 1.0, -1.0, 0.44454443263222340218},
    {1.7, 1.0, -0.25, 0.84421233432674801216},
    {1.7, 1.0, 0.5, 1.3492509890602333943},
    {1.7, 1.0, 2.0, 2.7505676117972974943},
    {1.7, 1.0, 10.0, 28.361401719919095191},
    {1.7, 1.0, 40.0, 3740.7315654835845531},
    {1.7, 1.5, -700.0, -0.00024538379184281648402},
    {1.7, 1.5, -60.0, -0.018756056613855251859},
    {1.7, 1.5, -20.0, -0.012067495672910286008},
    {1.7, 1.5, -5.0, -0.027870337336992290074},
    {1.7, 1.5, -1.0, 0.76142143134187750214},
    {1.7, 1.5, -0.25, 1.0282215622661370612},
    {1.7, 1.5, 0.5, 1.3471185378623730688},
    {1.7, 1.5, 2.0, 2.1720390189370287195},
    {1.7, 1.5, 10.0, 14.406893352879162564},
    {1.7, 1.5, 40.0, 1264.0466413645606022},
    {1.7, 2.5, -700.0, 0.0012272443036288274332},
    {1.7, 2.5, -60.0, 0.014237105957220953877},
    {1.7, 2.5, -20.0, 0.026908202723720374114},
    {1.7, 2.5, -5.0, 0.30688510379046694028},
    {1.7, 2.5, -1.0, 0.63277952992627269789},
    {1.7, 2.5, -0.25, 0.72063287687849068338},
    {1.7, 2.5, 0.5, 0.81923767476684290765},
    {1.7, 2.5, 2.0, 1.0533262689355759458},
    {1.7, 2.5, 10.0, 3.6309067869634912336},
    {1.7, 2.5, 40.0, 144.31420388018383298},
    {2.0, 0.3, -700.0, -7.4627151794499885977},
    {2.0, 0.3, -60.0, -3.5017941059295348243},
    {2.0, 0.3, -20.0, 2.1758382299674277483},
    {2.0, 0.3, -5.0, -1.6843466463668438252},
    {2.0, 0.3, -1.0, -0.41475941735331932228},
    {2.0, 0.3, -0.25, 0.12697622908593970453},
    {2.0, 0.3, 0.5, 0.79168526790743258326},
    {2.0, 0.3, 2.0, 2.5416065975874752425},
    {2.0, 0.3, 10.0, 26.382826985603625964},
    {2.0, 0.3, 40.0, 1014.8551416386007999},
    {2.0, 1.0, -700.0, 0.24355004953803435122},
    {2.0, 1.0, -60.0, 0.1078050249031146225},
    {2.0, 1.0, -20.0, -0.23794839198059109428},
    {2.0, 1.0, -5.0, -0.61727287645716659406},
    {2.0, 1.0, -1.0, 0.5403023058681397174},
    {2.0, 1.0, -0.25, 0.87758256189037271612},
    {2.0, 1.0, 0.5, 1.2605918365213561195},
    {2.0, 1.0, 2.0, 2.178183556608570864},
    {2.0, 1.0, 10.0, 11.833336070820503045},
    {2.0, 1.0, 40.0, 279.05568512996324292},
    {2.0, 1.5, -700.0, 0.16641147721927661734},
    {2.0, 1.5, -60.0, 0.27551538423654115115},
    {2.0, 1.5, -20.0, -0.41672277769801668448},
    {2.0, 1.5, -5.0, 0.039679821460639227625},
    {2.0, 1.5, -1.0, 0.84605678672415291429},
    {2.0, 1.5, -0.25, 1.0543396239668592113},
    {2.0, 1.5, 0.5, 1.2836732574942241612},
    {2.0, 1.5, 2.0, 1.8110127778007600933},
    {2.0, 1.5, 10.0, 6.6751214752004465732},
    {2.0, 1.5, 40.0, 110.97002469786211213},
    {2.0, 2.5, -700.0, 0.0045791190533104322177},
    {2.0, 2.5, -60.0, 0.038371154381332317289},
    {2.0, 2.5, -20.0, -0.027427469487766639935},
    {2.0, 2.5, -5.0, 0.40085683631533250726},
    {2.0, 2.5, -1.0, 0.66968425957766356696},
    {2.0, 2.5, -0.25, 0.73097583202092721327},
    {2.0, 2.5, 0.5, 0.79611601463185611237},
    {2.0, 2.5, 2.0, 0.93867507640585884379},
    {2.0, 2.5, 10.0, 2.0401843028083018204},
    {2.0, 2.5, 40.0, 17.530195968326448565},
};

inline constexpr double ml1_half_m1 = 0.42758357615580700441;
inline constexpr double ml1_half_2 = 108.94090438997797241;
inline constexpr double ml2_half_half_m03 = 0.34380978317745975013;
struct Pair { double x, value; };
// e^s erfc(sqrt s)
inline constexpr Pair erfc_kernel[] = {
    {0.01, 0.89645697996912664094},
    {0.25, 0.61569034419292587487},
    {1.0, 0.42758357615580700441},
    {4.0, 0.25539567631050574387},
};
// 1 + 0.7 * int_1^ell kernel, mu=0.5 kappa=0.45 rho=1
inline constexpr Pair constant_forcing[] = {
    {1.125, 1.1470139921041553104},
    {1.5, 1.2843571676611655898},
    {2, 1.3952949030748269509},
};
// int_0^1 (1-s)^(-1/2) E_(0.05,0.5)(-(1-s)^0.05) E_0.5(s^0.5) ds
inline constexpr double envelope_integral = 2.0324123995074245345;
}  // namespace oracle
