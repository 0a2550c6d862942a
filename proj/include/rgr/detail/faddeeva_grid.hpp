#pragma once

// Reference values of the Faddeeva function w(z) = exp(-z^2) erfc(-iz) on a
// 0.4-spaced grid over [0,8]x[0,8], used as Taylor expansion centers for
// mid-range arguments. Generated offline at 40-digit precision.

namespace rgr::specfun::detail {

inline constexpr double kFaddeevaGridStep = 0.4;
inline constexpr int kFaddeevaGridSize = 21;
inline constexpr double kFaddeevaGrid[21][21][2] = {
    {{1.000000000000000000, 0.0}, {0.8521437889662113233, 0.4061527263471477336}, {0.5272924240430485198, 0.6004124810183620559}, {0.2369277586821216557, 0.5723968453661936719}, {0.07730474044329972402, 0.4512838448445458939}, {0.01831563888873418029, 0.3400262170660662013}, {0.003151111598444435184, 0.2655223497566666219}, {0.0003936690406550776236, 0.2183986045791658289}, {0.00003571284964163517631, 0.1867038736090573165}, {2.352575200009771418e-6, 0.1636621150728291417}, {1.125351747192591145e-7, 0.1459535899001527833}, {3.908938434264849639e-9, 0.1318342250700724786}, {9.859505575991440987e-11, 0.1202778072092814341}, {1.805831437513212286e-12, 0.1106274439077673047}, {2.401734781620945110e-14, 0.1024382173552574029}, {2.319522830243569388e-16, 0.09539620896911076602}, {1.626664621453236941e-18, 0.08927277386738702839}, {8.283677007682796062e-21, 0.08389702221658750052}, {3.063190864577432538e-23, 0.07913844968950671638}, {8.225280651606601876e-26, 0.07489555000819611491}, {1.603810890548637853e-28, 0.07108811174448087960}},
    {{0.6707877852947615102, 0.0}, {0.6052949175764362881, 0.2197062581628138390}, {0.4492438541859702105, 0.3550816973600453020}, {0.2834434809551710118, 0.3864122993088729754}, {0.1617016351388430617, 0.3518025811360287612}, {0.09094447117162321192, 0.2975293488280405381}, {0.05458534793413828306, 0.2485658562655349688}, {0.03606439341460958652, 0.2108429202823922134}, {0.02586205159174079477, 0.1826256798446431309}, {0.01963193818935594298, 0.1611105574756853609}, {0.01549304146293048833, 0.1442127796218663732}, {0.01257500788903368869, 0.1305813296875674204}, {0.01042850248638663671, 0.1193415254833646148}, {0.008798133088775530183, 0.1099073500617256254}, {0.007528028044999228780, 0.1018714804094879721}, {0.006517895025742881179, 0.09494160280880639734}, {0.005700500875356426526, 0.08890221871478938172}, {0.005029255832556034164, 0.08359080019524070931}, {0.004470973936745762412, 0.07888235638650703624}, {0.004001458337220632807, 0.07467912716762661816}, {0.003602707889113103523, 0.07090351242629007591}},
    {{0.4891005892231147076, 0.0}, {0.4565787912538868592, 0.1311014397369575136}, {0.3745182736030723065, 0.2247888577022633405}, {0.2766933509434635502, 0.2667566427155126878}, {0.1914228143112556349, 0.2673777313209158002}, {0.1297684586082615692, 0.2463963959908081053}, {0.08957558603079606789, 0.2193019172981356276}, {0.06426557140437593644, 0.1937410267700904806}, {0.04808328743135654535, 0.1720026547766730831}, {0.03731602887357996988, 0.1540662261065780471}, {0.02982676939197307539, 0.1392820399784646246}, {0.02440775983780717728, 0.1269827193790747627}, {0.02035626255833347356, 0.1166281873800973551}, {0.01724474026935767869, 0.1078074571951146469}, {0.01480133959245065862, 0.1002111790082400923}, {0.01284635900279025133, 0.09360510998879437862}, {0.01125701319364387762, 0.08780981811937771945}, {0.009947004147027922967, 0.08268605555934904165}, {0.008854188541888043203, 0.07812435205384196191}, {0.007932864224270006864, 0.07403758429049166976}, {0.007148794266819406363, 0.07035561787726985142}},
    {{0.3785374169292396828, 0.0}, {0.3607991257388878969, 0.08454711385252287561}, {0.3141755250508795155, 0.1508770163056453545}, {0.2539854967325309507, 0.1898784817633174283}, {0.1952278097547888067, 0.2034939045590452470}, {0.1465407693858907505, 0.1999038497596421325}, {0.1099420334052888591, 0.1876202237321591201}, {0.08371833593812655265, 0.1724799839148105763}, {0.06515123975192436456, 0.1575023704573322974}, {0.05186920282742575667, 0.1438778014931685865}, {0.04216899382958468591, 0.1318906337048297897}, {0.03491600498869938668, 0.1214613096971427449}, {0.02936857058595645130, 0.1123978712022709584}, {0.02503786277117497420, 0.1044954378776371699}, {0.02159533595010465186, 0.09756964428685377103}, {0.01881505896062749823, 0.09146442178052898935}, {0.01653809342898077951, 0.08605077028209638131}, {0.01465022692054882837, 0.08122292016551131590}, {0.01306777815337239819, 0.07689420421594142338}, {0.01172834867053874505, 0.07299339211631949347}, {0.01058466567495604653, 0.06946165617453219282}},
    {{0.3059529922709410502, 0.0}, {0.2955062153190446033, 0.05797765179575357448}, {0.2672275375137400225, 0.1063550125750323751}, {0.2285920191379727374, 0.1394408956808994364}, {0.1877715057097109829, 0.1567649429759536306}, {0.1506218434161238433, 0.1615722583943426072}, {0.1198119697924126413, 0.1582990661627210909}, {0.09560120157937625078, 0.1507583418720187784}, {0.07705539142045101703, 0.1415103072843840568}, {0.06293625340638484712, 0.1319993701199266868}, {0.05212808774351248660, 0.1229265327952620980}, {0.04375943882451111781, 0.1145734683790128597}, {0.03718991074585226775, 0.1070105747606505908}, {0.03195931786565893756, 0.1002117012085123044}, {0.02773789385169645447, 0.09411210520880560726}, {0.02428768781805810201, 0.08863603580540095710}, {0.02143503172949907759, 0.08370908953103531402}, {0.01905149667811019600, 0.07926320506341667219}, {0.01704081663730485476, 0.07523820284369892800}, {0.01532987571208723192, 0.07158177062122866778}, {0.01386243936925364182, 0.06824880835163006666}},
    {{0.2553956763105057439, 0.0}, {0.2488441280859329093, 0.04174756164402443410}, {0.2307240041191566952, 0.07808485365044300263}, {0.2049262870166547043, 0.1054108973199458140}, {0.1760642740714445261, 0.1227234493524527243}, {0.1479527595120158242, 0.1311797170842178536}, {0.1228965537019392642, 0.1330154028988061523}, {0.1017825578885646203, 0.1305531191769533306}, {0.08456161937415543543, 0.1256597016475931022}, {0.07073633960078920232, 0.1196165492341136944}, {0.05968692961044589895, 0.1132100561244881957}, {0.05083363058835392382, 0.1068808735029288326}, {0.04369370071938305629, 0.1008536117313164168}, {0.03788659126289390760, 0.09522724045999995380}, {0.03311971357991119957, 0.09003145034812088896}, {0.02917014429032164180, 0.08525967060156223372}, {0.02586809955729566627, 0.08088769931499768790}, {0.02308369568152191803, 0.07688393455563069467}, {0.02071687938505285697, 0.07321483826583379662}, {0.01868994231921736735, 0.06984773697826571705}, {0.01694200341113103539, 0.06675215241849695459}},
    {{0.2184987345370332965, 0.0}, {0.2141720420167175697, 0.03126268719998444601}, {0.2020129354422630732, 0.05929787492249037094}, {0.1841650361068996671, 0.08177257997304853252}, {0.1633304549375809541, 0.09771306507981473245}, {0.1419817076358024759, 0.1074075681606122634}, {0.1218840687671016063, 0.1119416004606211390}, {0.1040015017583238666, 0.1126756575172324317}, {0.08865656469029750300, 0.1108751727829168781}, {0.07577008723418193860, 0.1075402781961331155}, {0.06506714719617882056, 0.1033814604904689385}, {0.05621193916082905811, 0.09886637821523855617}, {0.04887939896958221027, 0.09428484664233575154}, {0.04278517569086948412, 0.08980653863274881068}, {0.03769298345557819520, 0.08552406822415215078}, {0.03341163646472304547, 0.08148238869593196846}, {0.02978842657278001568, 0.07769784956656141444}, {0.02670197719212591030, 0.07417017806717440515}, {0.02405582770129596844, 0.07088986539130766139}, {0.02177310901791783477, 0.06784265196415869100}, {0.01979229277971809143, 0.06501220960500919293}},
    {{0.1905488796899918738, 0.0}, {0.1875664689646704913, 0.02416814028147231151}, {0.1790837920384618827, 0.04631542558361814529}, {0.1663420104334630010, 0.06488956731401249187}, {0.1509811768923760113, 0.07908245673873889043}, {0.1346187984750494625, 0.08883655966817759910}, {0.1185477966945174242, 0.09464587129483700474}, {0.1036172149762783539, 0.09728441320358805356}, {0.09026261851441011861, 0.09757494785954015010}, {0.07861195737953393318, 0.09624710283661250551}, {0.06860255573820092453, 0.09387977934124769954}, {0.06007495617603792675, 0.09089875095517804662}, {0.05283504929194311820, 0.08760040376863897249}, {0.04668933051594827107, 0.08418234106802084947}, {0.04146182691772050533, 0.08077132002234996053}, {0.03700018917640997867, 0.07744531963373922683}, {0.03317611378968142168, 0.07424967049431227983}, {0.02988319370597655066, 0.07120831908653769971}, {0.02703387628166385944, 0.06833147810094677786}, {0.02455635479829367392, 0.06562073112625614908}, {0.02239175093328526735, 0.06307239779100314670}},
    {{0.1687280968118843072, 0.0}, {0.1665974256809055239, 0.01917859166243444014}, {0.1604813078937961741, 0.03703842848530394695}, {0.1511303697540935173, 0.05251896574403163744}, {0.1395737394612045971, 0.06498441066661895549}, {0.1268861824746718095, 0.07425552511601370899}, {0.1140001804307722942, 0.08052626454409003842}, {0.1016055381783337255, 0.08422320405343380735}, {0.09013374206173502024, 0.08586646440278116170}, {0.07979738115157374438, 0.08596721615846924201}, {0.07065114641072941589, 0.08497009862919816107}, {0.06265088206450942565, 0.08323208351186633640}, {0.05569972158998651090, 0.08102404595124527605}, {0.04967935444502623377, 0.07854314178896529481}, {0.04446887668889297064, 0.07592824526583282301}, {0.03995484969915987006, 0.07327443454775187604}, {0.03603578777151455608, 0.07064497405301168266}, {0.03262342270423812861, 0.06808055864062348742}, {0.02964227179294394811, 0.06560615103206819540}, {0.02702842453830030483, 0.06323590645077979507}, {0.02472806053434039904, 0.06097665902334172972}},
    {{0.1512652998323738967, 0.0}, {0.1496965257097304122, 0.01555366004373537455}, {0.1451610601705443857, 0.03021561884196512248}, {0.1381305494113258113, 0.04324295059938597610}, {0.1292708326210735174, 0.05414447012211089287}, {0.1193090751842351339, 0.06271345324984247496}, {0.1089166144475166828, 0.06899488744741061491}, {0.09863399407415745548, 0.07321285123911704955}, {0.08884323600945242051, 0.07568836784072893716}, {0.07977660814881905719, 0.07676997070302765022}, {0.07154541476455954007, 0.07678668898266952120}, {0.06417447909345191484, 0.07602308605826425320}, {0.05763340952616315007, 0.07471087954521848238}, {0.05186088319256969121, 0.07303071116421391794}, {0.04678155318743880118, 0.07111886094935506877}, {0.04231679219465047149, 0.06907550510539857200}, {0.03839091556915676824, 0.06697266343963799457}, {0.03493437254580474637, 0.06486102863564329780}, {0.03188504472778527315, 0.06277546935311951070}, {0.02918844154561686304, 0.06073929141837705765}, {0.02679730400128625848, 0.05876745321055870161}},
    {{0.1369994576250613899, 0.0}, {0.1358144005498466574, 0.01284661933805988458}, {0.1323689621662398026, 0.02507150682851572367}, {0.1269696290117570428, 0.03614208733299814647}, {0.1200593714142935698, 0.04568014456376945833}, {0.1121394779021160149, 0.05348899385296692836}, {0.1036957486417411221, 0.05954271602235345864}, {0.09514508808299775691, 0.06394885586428503853}, {0.08680831140475426626, 0.06690029765365269670}, {0.07890610324992120583, 0.06862973561972713621}, {0.07157043342636532916, 0.06937451861377146070}, {0.06486326701748520586, 0.06935405188645187783}, {0.05879638965140564575, 0.06875824635001699061}, {0.05334879332349067945, 0.06774395879269935047}, {0.04848023343621408461, 0.06643632341739000434}, {0.04414092342364237808, 0.06493254512980649577}, {0.04027797774945607641, 0.06330654359857488353}, {0.03683939395796315124, 0.06161352506931597581}, {0.03377630538503824904, 0.05989403802433056808}, {0.03104408803091912271, 0.05817736040120519977}, {0.02860274785395495677, 0.05648422254928216236}},
    {{0.1251416555381449000, 0.0}, {0.1242265563690468298, 0.01077689050547345850}, {0.1215540154960692501, 0.02110856259447053772}, {0.1173291954843349474, 0.03060511676595122551}, {0.1118543417099005462, 0.03897424553052389805}, {0.1054814588000931671, 0.04604219117752147880}, {0.09856513354235220680, 0.05175224663051834626}, {0.09142518004142049674, 0.05614587587957306935}, {0.08432384152388699882, 0.05933463988017553300}, {0.07745737562727024992, 0.06147085110949266957}, {0.07095866419239479736, 0.06272246086415603852}, {0.06490641322173703789, 0.06325471548884408891}, {0.05933699286450335873, 0.06321874399787022696}, {0.05425616768202341089, 0.06274587918929848446}, {0.04964921524399919238, 0.06194605227571492960}, {0.04548888472706910640, 0.06090870522360309676}, {0.04174123170069905312, 0.05970501709053972104}, {0.03836964658549318970, 0.05839063036570083694}, {0.03533747783137107688, 0.05700838912333527891}, {0.03260962863509900065, 0.05559083430987832829}, {0.03015344024271685219, 0.05416235111866447459}},
    {{0.1151390756608030613, 0.0}, {0.1144188721176134856, 0.009161988609791599496}, {0.1123078713814570119, 0.01799763252982366889}, {0.1089470704608744325, 0.02621598678029467338}, {0.1045474715133504858, 0.03358953639474423147}, {0.09936065624070925161, 0.03996989326317169957}, {0.09364813592442368493, 0.04528990790822868075}, {0.08765534850289606644, 0.04955441965619517054}, {0.08159375661100053726, 0.05282394120421832523}, {0.07563179750596045087, 0.05519591813669231799}, {0.06989338805842514768, 0.05678724415515053347}, {0.06446167742378003002, 0.05772019351433840761}, {0.05938564922256480211, 0.05811250003738065771}, {0.05468764151274550303, 0.05807131233698353581}, {0.05037051003138554546, 0.05769024520103290604}, {0.04642376321640177388, 0.05704861778813070578}, {0.04282843890104939442, 0.05621206357198674134}, {0.03956076141162120776, 0.05523388306525969254}, {0.03659474991105723968, 0.05415670488274241666}, {0.03390399102597274417, 0.05301418367781278057}, {0.03146278092351517351, 0.05183258348725043412}},
    {{0.1065938974153643208, 0.0}, {0.1060176107096473065, 0.007879549164104334822}, {0.1043234250793725770, 0.01551492643830921703}, {0.1016105351585846756, 0.02268524502428119124}, {0.09802933025335770200, 0.02921188593511954041}, {0.09376264045931590857, 0.03497013319060835930}, {0.08900548647988342234, 0.03989241279634898316}, {0.08394693582863018706, 0.04396406605462423220}, {0.07875647301550920837, 0.04721392615483405304}, {0.07357579863438739571, 0.04970241266740989569}, {0.06851569685137662747, 0.05150953729300300737}, {0.06365683125699517323, 0.05272446368811953610}, {0.05905306878700409928, 0.05343743451278692421}, {0.05473605081201815779, 0.05373420521069654194}, {0.05072004287104323867, 0.05369269782234566060}, {0.04700644625823433466, 0.05338139391385371784}, {0.04358765489807417376, 0.05285895726055579852}, {0.04045015550950429822, 0.05217464135298037692}, {0.03757690010341197157, 0.05136913728997650479}, {0.03494904592422656493, 0.05047561909249943118}, {0.03254718069658979317, 0.04952082898483441118}},
    {{0.09921313139225195893, 0.0}, {0.09874524770961577392, 0.006845288748866367911}, {0.09736637072528794912, 0.01350453845849864554}, {0.09514776120988238750, 0.01980740845616291439}, {0.09219864061788493229, 0.02561236704762099317}, {0.08865396335436050343, 0.03081530639332247023}, {0.08466081248208574902, 0.03535285967574953254}, {0.08036566000680833310, 0.03920076839794791714}, {0.07590413799244139998, 0.04236850253983781857}, {0.07139413762693208223, 0.04489172523667648958}, {0.06693227040113839234, 0.04682413677564168213}, {0.06259317179268791524, 0.04822987900244216336}, {0.05843085879434796034, 0.04917721517016519056}, {0.05448132528134600212, 0.04973376897191874611}, {0.05076568480422454789, 0.04996328939519548415}, {0.04729336003243139611, 0.04992372268850672602}, {0.04406500747197835041, 0.04966629808203059723}, {0.04107502077080142340, 0.04923533415781926700}, {0.03831356515736330308, 0.04866851355495302435}, {0.03576816281749676457, 0.04799742945209318144}, {0.03342488387922013608, 0.04724826236086780444}},
    {{0.09277656780053835439, 0.0}, {0.09239178340712634804, 0.005999759285223295431}, {0.09125548139623583702, 0.01185546244917053615}, {0.08941982483573611991, 0.01743387380777344474}, {0.08696550184221399552, 0.02262179947681688726}, {0.08399358387454510224, 0.02733248969643635582}, {0.08061623692718902885, 0.03150863196154471871}, {0.07694770072738947730, 0.03512202614706191881}, {0.07309665446257729445, 0.03817057854007212311}, {0.06916062371609052899, 0.04067355158278612807}, {0.06522260524569174696, 0.04266604757657298650}, {0.06134970866058008384, 0.04419355050363018084}, {0.05759338893671020430, 0.04530709576681676264}, {0.05399076636357279321, 0.04605937086331747805}, {0.05056656224774360509, 0.04650182880328046618}, {0.04733527113339601410, 0.04668274486973197331}, {0.04430330208668349027, 0.04664606496125100381}, {0.04147092544834419666, 0.04643086534536301227}, {0.03883394399883352412, 0.04607125039728587453}, {0.03638506549838444921, 0.04559654019054986967}, {0.03411498969773123514, 0.04503163162443245820}},
    {{0.08711570467441576313, 0.0}, {0.08679562537946379615, 0.005300135780701489602}, {0.08584877364207084182, 0.01048710017955279373}, {0.08431398395831207444, 0.01545533047096143107}, {0.08225179807270942592, 0.02011346854526489240}, {0.07973893802664503063, 0.02438914898653080699}, {0.07686186468480616392, 0.02823155198576058520}, {0.07371032905230673356, 0.03161170546521502211}, {0.07037167681106850098, 0.03452087090464516281}, {0.06692640513853778308, 0.03696756643771624532}, {0.06344517909884975812, 0.03897384970344779439}, {0.05998726294689501728, 0.04057142613930166382}, {0.05660014944114345461, 0.04179801418576113063}, {0.05332008591434129136, 0.04269423817940275968}, {0.05017318492534316793, 0.04330117158659800924}, {0.04717684498569905526, 0.04365853939113810979}, {0.04434126816891507939, 0.04380351501220283398}, {0.04167092712221867340, 0.04377000981801905588}, {0.03916589228908229135, 0.04358834298428972773}, {0.03682297570567898604, 0.04328518627047572957}, {0.03463667976181491639, 0.04288369397498438542}},
    {{0.08209953815224358712, 0.0}, {0.08183055041599208319, 0.004714981045398139983}, {0.08103367254896218715, 0.009339891605512413033}, {0.07973826155715327960, 0.01379010903565137318}, {0.07799039100197736611, 0.01799125050766594992}, {0.07584903152737599123, 0.02188278134068178830}, {0.07338151754407103770, 0.02542013195775905915}, {0.07065889073773026522, 0.02857526916351462788}, {0.06775163974206239960, 0.03133589389239549030}, {0.06472620711291188106, 0.03370359355538996619}, {0.06164245620929211504, 0.03569134541473580552}, {0.05855212432231128978, 0.03732075584604495192}, {0.05549816254688131886, 0.03861935284347916054}, {0.05251478823169957078, 0.03961815464435966746}, {0.04962804884643011054, 0.04034964098705755571}, {0.04685670492011915403, 0.04084617189745746651}, {0.04421327003258113933, 0.04113883962633724057}, {0.04170508502986577305, 0.04125670297950454205}, {0.03933534261961245508, 0.04122633612938154783}, {0.03710401203979487358, 0.04107162074661909422}, {0.03500863944885907080, 0.04081371570389404563}},
    {{0.07762476030543790585, 0.0}, {0.07739662482567575025, 0.004220823659247460070}, {0.07671992660909842170, 0.008369116827217665019}, {0.07561716825289930965, 0.01237631432738448935}, {0.07412386984397770456, 0.01618134806110698070}, {0.07228588562944463156, 0.01973338891738641101}, {0.07015616880965157511, 0.02299357706460647131}, {0.06779137475051139875, 0.02593567769639414178}, {0.06524865974434051709, 0.02854574722734711216}, {0.06258294801954733695, 0.03082100469031439484}, {0.05984483002156272961, 0.03276816132689606039}, {0.05707914581366293373, 0.03440146909805342777}, {0.05432421784539906416, 0.03574071755595389308}, {0.05161163696935997837, 0.03680935440691232312}, {0.04896647539781510123, 0.03763284382216751693}, {0.04640779523996224543, 0.03823731993115061224}, {0.04394933355938339198, 0.03864854778260676618}, {0.04160026664198055341, 0.03889117271293870141}, {0.03936598094986942299, 0.03898822068573473176}, {0.03724880171012035786, 0.03896080422507280543}, {0.03524864987014385067, 0.03882798799409348590}},
    {{0.07360885831058696072, 0.0}, {0.07341376060136690464, 0.003799870096565057180}, {0.07283443611347468810, 0.007540709870514727533}, {0.07188835286641719098, 0.01116641880690440545}, {0.07060322195619978011, 0.01462646398081355703}, {0.06901508348757453763, 0.01787798141848897942}, {0.06716596722599192071, 0.02088718058856853664}, {0.06510138960447189597, 0.02362999284312104235}, {0.06286793468365550977, 0.02609200230146790419}, {0.06051111846460316351, 0.02826777458889127145}, {0.05807366826239798532, 0.03015974528529653277}, {0.05559427725585728117, 0.03177684446444097354}, {0.05310683146976201117, 0.03313302152747830166}, {0.05064005992934031990, 0.03424580456967198064}, {0.04821753095459616095, 0.03513499035024057619}, {0.04585790688576786700, 0.03582152259584054739}, {0.04357537196135503403, 0.03632658325348283073}, {0.04138015888812436431, 0.03667089608449643731}, {0.03927911454714843591, 0.03687422512955861485}, {0.03727626098510176019, 0.03695504112967357013}, {0.03537332222047561500, 0.03693032532851820611}},
    {{0.06998516620088092772, 0.0}, {0.06981706298421703181, 0.003438443517178369407}, {0.06931743019506327845, 0.006828377018991803549}, {0.06849998526934397489, 0.01012348508797788262}, {0.06738658437043556041, 0.01328164137982480790}, {0.06600583766412597364, 0.01626653282402791449}, {0.06439139671816367323, 0.01904879678022693270}, {0.06258009185098785736, 0.02160662000056071671}, {0.06061009262193670625, 0.02392581346708672702}, {0.05851923718089900817, 0.02599943110569460271}, {0.05634363422457203238, 0.02782703615921897455}, {0.05411659431377590590, 0.02941373457285688428}, {0.05186790356896088042, 0.03076909223237284097}, {0.04962341790835147315, 0.03190603711462595007}, {0.04740493259075842415, 0.03283982413570036098}, {0.04523026979128607950, 0.03358711502590168671}, {0.04311352441113873672, 0.03416520191566588856}, {0.04106541260542659696, 0.03459138387918973835}, {0.03909367584234750159, 0.03488249140701670034}, {0.03720350334175840163, 0.03505454455266503027}, {0.03539794577438106489, 0.03512252557190741789}}
};

}  // namespace rgr::specfun::detail
