// Generated table of the frequency-dependent weights of the fitted methods.
// Each entry stores b_j as  scale * v^pv * cos(v/2)^pc * sin(v/2)^ps * inner(v)
// after the common monomial prefactor has been cancelled against the
// denominator. A null inner marks a weight that is recovered from the fitting
// conditions instead (see closed_form.cpp). Do not edit by hand.

#include "closed_form_data.hpp"

namespace oscint::detail {

// clang-format off
const closed_form_entry closed_form_table[7][7] = {
  { // PF-D0
    {"-1/4096", -2, 0, -12,
     "((18392342566*cos(v)-11352051608*cos(2*v)+4958070583*cos(3*v)-1405810666*cos(4*v)+234300323*cos("
     "5*v))*v^2)/7257600-((5373508799*v^2)/(3628800))-2*cos(4*v)+4*cos(5*v)-4*cos(6*v)+2*cos(7*v)"},
    {"-1/4096", -2, 0, -12,
     "-((35142254976*cos(v)-20245959411*cos(2*v)+7950775936*cos(3*v)-1405906674*cos(4*v)+234300323*cos"
     "(6*v))*v^2)/7257600+((138116413*v^2)/(48384))+24*cos(4*v)-48*cos(5*v)+48*cos(6*v)-24*cos(7*v)"},
    {"-1/4096", -2, 0, -12,
     "((50246280942*cos(v)-26679563229*cos(2*v)+8977155979*cos(3*v)-702953337*cos(5*v)+702905333*cos(6"
     "*v))*v^2)/3628800-((415407179*v^2)/(50400))-132*cos(4*v)+264*cos(5*v)-264*cos(6*v)+132*cos(7*v)"},
    {"-1/4096", -2, 0, -12,
     "-((119523462784*cos(v)-43206415175*cos(2*v)+17954311958*cos(4*v)-7950775936*cos(5*v)+4958070583*"
     "cos(6*v))*v^2)/7257600+((36857631107*v^2)/(3628800))+440*cos(4*v)-880*cos(5*v)+880*cos(6*v)-440*"
     "cos(7*v)"},
    {"-1/4096", -2, 0, -12,
     "((113384696634*cos(v)-43206415175*cos(3*v)+53359126458*cos(4*v)-20245959411*cos(5*v)+11352051608"
     "*cos(6*v))*v^2)/7257600-((12520978019*v^2)/(1209600))-990*cos(4*v)+1980*cos(5*v)-1980*cos(6*v)+9"
     "90*cos(7*v)"},
    {"-1/4096", -2, 0, -12,
     "-((56692348317*cos(2*v)-59761731392*cos(3*v)+50246280942*cos(4*v)-17571127488*cos(5*v)+919617128"
     "3*cos(6*v))*v^2)/3628800+((1197972677*v^2)/(604800))+1584*cos(4*v)-3168*cos(5*v)+3168*cos(6*v)-1"
     "584*cos(7*v)"},
    {"-1/4096", -2, 0, -12,
     "(v^2*(-7187836062*cos(v)+37562934057*cos(2*v)-36857631107*cos(3*v)+29909316888*cos(4*v)-10358730"
     "975*cos(5*v)+5373508799*cos(6*v)))/1814400-1848*(cos(4*v)-2*cos(5*v)+2*cos(6*v)-cos(7*v))"},
  },
  { // PF-D1
    {"-1/14863564800", -3, -1, -12,
     "29030400*(2*cos(v)+2*cos(2*v)+2*cos(3*v)+2*cos(4*v)+2*cos(6*v)+1)*sin((v/2))^3+v*(3628800*(9*cos"
     "((7*v/2))-19*cos((9*v/2))+2*(11*cos((11*v/2))-7*cos((13*v/2))+cos((15*v/2))))-11*v^2*(65542714*c"
     "os((v/2))-133977068*cos((3*v/2))+127463860*cos((5*v/2))-62185337*cos((7*v/2))+21299831*cos((9*v/"
     "2))))"},
    {"-1/7431782400", -3, -1, -12,
     "v*(11*v^2*(57295722*cos((v/2))-50530458*cos((3*v/2))+72737235*cos((5*v/2))+6776053*cos((7*v/2))+"
     "1285617*cos((9*v/2))+21299831*cos((11*v/2)))-1814400*(10*cos((5*v/2))+68*cos((7*v/2))-156*cos((9"
     "*v/2))+187*cos((11*v/2))-119*cos((13*v/2))+9*cos((15*v/2))+cos((17*v/2))))-29030400*(12*cos(v)+1"
     "2*cos(2*v)+12*cos(3*v)+11*cos(4*v)+2*cos(5*v)+10*cos(6*v)+cos(7*v)+6)*sin((v/2))^3"},
    {"-1/14863564800", -3, -1, -12,
     "58060800*(66*cos(v)+66*cos(2*v)+66*cos(3*v)+56*cos(4*v)+20*cos(5*v)+46*cos(6*v)+10*cos(7*v)+33)*"
     "sin((v/2))^3+v*(7257600*(50*cos((5*v/2))+97*cos((7*v/2))-267*cos((9*v/2))+341*cos((11*v/2))-217*"
     "cos((13*v/2))-9*cos((15*v/2))+5*cos((17*v/2)))-11*v^2*(418185576*cos((v/2))-101897295*cos((3*v/2"
     "))+429149785*cos((5*v/2))+213355284*cos((7*v/2))+25712340*cos((9*v/2))+21299831*(9*cos((11*v/2))"
     "+cos((13*v/2)))))"},
    {"-1/7431782400", -3, -1, -12,
     "v*(11*v^2*(469639178*cos((v/2))+311586932*cos((3*v/2))+333470325*cos((5*v/2))+480049389*cos((7*v"
     "/2))+77311321*cos((9*v/2))+260311901*cos((11*v/2))+63470954*cos((13*v/2)))-9072000*(90*cos((5*v/"
     "2))+36*cos((7*v/2))-188*cos((9*v/2))+275*cos((11*v/2))-175*cos((13*v/2))-47*cos((15*v/2))+9*cos("
     "(17*v/2))))-145152000*(44*cos(v)+44*cos(2*v)+44*cos(3*v)+35*cos(4*v)+18*cos(5*v)+26*cos(6*v)+9*c"
     "os(7*v)+22)*sin((v/2))^3"},
    {"-1/14863564800", -3, -1, -12,
     "435456000*(66*cos(v)+66*cos(2*v)+66*cos(3*v)+50*cos(4*v)+32*cos(5*v)+34*cos(6*v)+16*cos(7*v)+33)"
     "*sin((v/2))^3+v*(54432000*(80*cos((5*v/2))-23*cos((7*v/2))-51*cos((9*v/2))+110*cos((11*v/2))-70*"
     "cos((13*v/2))-54*cos((15*v/2))+8*cos((17*v/2)))-11*v^2*(2105070006*cos((v/2))+1324106064*cos((3*"
     "v/2))+1778508400*cos((5*v/2))+1717441153*cos((7*v/2))+754192017*cos((9*v/2))+920962652*cos((11*v"
     "/2))+380999708*cos((13*v/2))))"},
    {"-1/3715891200", -3, -1, -12,
     "v*(11*v^2*(809642310*cos((v/2))+579296403*cos((3*v/2))+714780380*cos((5*v/2))+616166543*cos((7*v"
     "/2))+386753499*cos((9*v/2))+310811926*cos((11*v/2))+175060939*cos((13*v/2)))-5443200*(350*cos((5"
     "*v/2))-212*cos((7*v/2))+12*cos((9*v/2))+209*cos((11*v/2))-133*cos((13*v/2))-261*cos((15*v/2))+35"
     "*cos((17*v/2))))-87091200*(132*cos(v)+132*cos(2*v)+132*cos(3*v)+97*cos(4*v)+70*cos(5*v)+62*cos(6"
     "*v)+35*cos(7*v)+66)*sin((v/2))^3"},
    {"1/7431782400", -3, -1, -12,
     "v*(11*v^2*(1943141544*cos((v/2))+1212190059*cos((3*v/2))+1835374595*cos((5*v/2))+1290288356*cos("
     "(7*v/2))+1000981284*cos((9*v/2))+673851637*cos((11*v/2))+426700525*cos((13*v/2)))-152409600*(30*"
     "cos((5*v/2))-21*cos((7*v/2))+7*cos((9*v/2))+11*cos((11*v/2))-7*cos((13*v/2))-23*cos((15*v/2))+3*"
     "cos((17*v/2))))+304819200*(3*sin((5*v/2))-4*sin((7*v/2))+2*sin((11*v/2))-4*sin((15*v/2))+3*sin(("
     "17*v/2)))"},
  },
  { // PF-D2
    {"1/990904320", -4, -3, -12,
     "8*v^2*(11*(-4002729*cos(v)+2078430*cos(2*v)-724279*cos(3*v)+2346178)*v^2+725760*(-62*cos(v)+59*c"
     "os(2*v)-40*cos(3*v)+26*cos(4*v)-8*cos(5*v)+cos(6*v)+35)*sin((v/2))^2)*cos((v/2))^3+483840*sin((v"
     "/2))^3*(v*(30*cos(v)+30*cos(2*v)+30*cos(3*v)+13*cos(4*v)+18*cos(5*v)+12*cos(6*v)-5*cos(7*v))+3*("
     "5*v+sin(4*v)+sin(7*v)))"},
    {"1/330301440", -4, -3, -12,
     "-8*v^2*(-9314063*v^2+572*(22949*v^2-120960)*cos(v)+44*(1391040-428431*v^2)*cos(2*v)+(9699668*v^2"
     "-46287360)*cos(3*v)+(27699840-7967069*v^2)*cos(4*v)-10644480*cos(5*v)+1108800*cos(6*v)+241920*co"
     "s(7*v)-60480*cos(8*v)+35925120)*cos((v/2))^3-322560*sin((v/2))^3*(2*v*(90*cos(v)+90*cos(2*v)+81*"
     "cos(3*v)+50*cos(4*v)+49*cos(5*v)+30*cos(6*v)-4*cos(7*v)-2*cos(8*v))+3*(30*v+sin(3*v)+4*sin(4*v)+"
     "sin(5*v)+sin(6*v)+4*sin(7*v)+sin(8*v)))"},
    {"1/165150720", -4, -3, -12,
     "10080*(8*v*(1980*cos(v)+1961*cos(2*v)+1680*cos(3*v)+1226*cos(4*v)+1015*cos(5*v)+591*cos(6*v)+50*"
     "cos(7*v)-52*cos(8*v)-3*cos(9*v)+990)*sin((v/2))^3-39*cos((3*v/2))+3*(13*cos((5*v/2))+32*cos((7*v"
     "/2))-46*cos((9*v/2))+46*cos((13*v/2))-32*cos((15*v/2))-13*cos((17*v/2))+13*cos((19*v/2))+cos((21"
     "*v/2))))-cos((v/2))*((11*(6333473*cos(2*v)+4157054*cos(3*v)+3619356*cos(4*v)+2960054*cos(5*v)+72"
     "4279*cos(6*v))*v^2+4*(17018353*v^2+438480)*cos(v)+20160*(-652*cos(2*v)+445*cos(3*v)-118*cos(4*v)"
     "-675*cos(5*v)+939*cos(6*v)+129*cos(7*v)-104*cos(8*v)+14*cos(9*v)+cos(10*v)))*v^2+12*(2409451*v^4"
     "-110880*v^2+2520))"},
    {"1/990904320", -4, -3, -12,
     "3*(432759107*v^4-7257600*v^2+483840)*cos((v/2))+362880*(17*cos((3*v/2))-31*cos((5*v/2))-16*cos(("
     "7*v/2))+37*cos((9*v/2))-37*cos((13*v/2))+16*cos((15*v/2))+31*cos((17*v/2))-17*cos((19*v/2))-4*co"
     "s((21*v/2)))+v*(v*(11*(103979586*cos((5*v/2))+82091598*cos((7*v/2))+62181040*cos((9*v/2))+362759"
     "04*cos((11*v/2))+724279*(15*cos((13*v/2))+cos((15*v/2))))*v^2+(1298904167*v^2-104025600)*cos((3*"
     "v/2))+60480*(-18*cos((5*v/2))-366*cos((7*v/2))-1325*cos((9*v/2))+957*cos((11*v/2))+2370*cos((13*"
     "v/2))+718*cos((15*v/2))-279*cos((17*v/2))+15*cos((19*v/2))+8*cos(((21)*v)/(2))))-1935360*(1650*c"
     "os(v)+1612*cos(2*v)+1365*cos(3*v)+1066*cos(4*v)+819*cos(5*v)+468*cos(6*v)+100*cos(7*v)-34*cos(8*"
     "v)-6*cos(9*v)+825)*sin((v/2))^3)"},
    {"1/330301440", -4, -3, -12,
     "-24*(40469957*v^4-1058400*v^2+70560)*cos((v/2))+60480*(-44*cos((3*v/2))+117*cos((5*v/2))+37*cos("
     "(7*v/2))-109*cos((9*v/2))+109*cos((13*v/2))-37*cos((15*v/2))-117*cos((17*v/2))+44*cos((19*v/2))+"
     "28*cos((21*v/2)))+v*(161280*(14850*cos(v)+14318*cos(2*v)+12210*cos(3*v)+9699*cos(4*v)+7266*cos(5"
     "*v)+4152*cos(6*v)+1125*cos(7*v)-176*cos(8*v)-84*cos(9*v)+7425)*sin((v/2))^3+v*(-11*(76636238*cos"
     "((5*v/2))+62120365*cos((7*v/2))+46335777*cos((9*v/2))+26765870*cos((11*v/2))+9510034*cos((13*v/2"
     "))+1196642*cos((15*v/2)))*v^2+14*(4348800-69382489*v^2)*cos((3*v/2))+20160*(288*cos((5*v/2))+150"
     "6*cos((7*v/2))+1900*cos((9*v/2))-2112*cos((11*v/2))-4320*cos((13*v/2))-1913*cos((15*v/2))+339*co"
     "s((17*v/2))+60*cos((19*v/2))-28*cos((21*v/2)))))"},
    {"1/330301440", -4, -3, -12,
     "3*(521152357*v^4-16934400*v^2+1128960)*cos((v/2))+241920*(7*cos((3*v/2))-33*cos((5*v/2))-20*cos("
     "(7*v/2))+41*cos((9*v/2))-41*cos((13*v/2))+20*cos((15*v/2))+33*cos((17*v/2))-7*(cos((19*v/2))+2*c"
     "os((21*v/2))))+v*(v*(11*(123210823*cos((5*v/2))+99307625*cos((7*v/2))+73495191*cos((9*v/2))+4312"
     "5241*cos((11*v/2))+15932285*cos((13*v/2))+2736371*cos((15*v/2)))*v^2+(1526016833*v^2-73382400)*c"
     "os((3*v/2))-40320*(774*cos((5*v/2))+1002*cos((7*v/2))+1333*cos((9*v/2))-1617*cos((11*v/2))-3258*"
     "cos((13*v/2))-1442*cos((15*v/2))+51*cos((17*v/2))+105*cos((19*v/2))-28*cos((21*v/2))))-1290240*("
     "2970*cos(v)+2837*cos(2*v)+2445*cos(3*v)+1938*cos(4*v)+1446*cos(5*v)+831*cos(6*v)+240*cos(7*v)-14"
     "*cos(8*v)-21*cos(9*v)+1485)*sin((v/2))^3)"},
    {"-1/495452160", -4, -3, -12,
     "54*(50601001*v^4-1764000*v^2+117600)*cos((v/2))+1270080*(cos((3*v/2))-9*cos((5*v/2))-8*cos((7*v/"
     "2))+14*cos((9*v/2))-14*cos((13*v/2))+8*cos((15*v/2))+9*cos((17*v/2))-cos((19*v/2))-5*cos((21*v/2"
     ")))+v*(v*(11*(3*(71792647*cos((5*v/2))+57772764*cos((7*v/2))+42931200*cos((9*v/2))+25158645*cos("
     "(11*v/2))+9410087*cos(((13)*v)/(2)))+5313226*cos((15*v/2)))*v^2+(2670318541*v^2-112190400)*cos(("
     "3*v/2))+423360*(-171*cos((5*v/2))-141*cos((7*v/2))-221*cos((9*v/2))+264*cos((11*v/2))+540*cos((1"
     "3*v/2))+229*cos((15*v/2))+6*cos((17*v/2))-21*cos((19*v/2))+5*cos((21*v/2))))-3386880*(1980*cos(v"
     ")+1885*cos(2*v)+1632*cos(3*v)+1290*cos(4*v)+963*cos(5*v)+555*cos(6*v)+162*cos(7*v)-4*cos(8*v)-15"
     "*cos(9*v)+990)*sin((v/2))^3)"},
  },
  { // PF-D3
    {"1/15728640", -5, -5, -12,
     "140734*cos((v/2))*v^5+12*(5357*v^4-1680*v^2+480)*cos((3*v/2))*v+(4*(21791*v^4+6480*v^2-3600)*cos"
     "((5*v/2))+(97229*v^4-27360*v^2+8640)*cos((7*v/2))+(32989*v^4-7200*v^2+10800)*cos((9*v/2))+80*(-8"
     "*v*(492*cos(v)+492*cos(2*v)+301*cos(3*v)+288*cos(4*v)+215*cos(5*v)-86*cos(6*v)-60*cos(7*v)+26*co"
     "s(8*v)+246)*sin((v/2))^3+33*(16*v^2-9)*cos((11*v/2))+54*(3-2*v^2)*cos((13*v/2))+30*(3-4*v^2)*cos"
     "((15*v/2))+9*(8*v^2-13)*cos((17*v/2))+3*(9-4*v^2)*cos(((19)*v)/(2))))*v-61440*cos((v/2))^2*(2*co"
     "s(v)+2*cos(2*v)+2*cos(3*v)+2*cos(4*v)+2*cos(6*v)+1)*sin((v/2))^5"},
    {"-1/983040", -5, -3, -12,
     "84282*cos((v/2))*v^5+4*(20504*v^4-4200*v^2+1125)*cos((3*v/2))*v+(12*(4774*v^4+2160*v^2-975)*cos("
     "(5*v/2))+15*(4015*v^4-2112*v^2+552)*cos((7*v/2))+(32989*v^4+4860*v^2+6480)*cos((9*v/2))+60*(99*("
     "5*v^2-3)*cos((11*v/2))+3*(63-71*v^2)*cos((13*v/2))+(60-11*v^2)*cos((15*v/2))+2*(-4*v*(492*cos(v)"
     "+492*cos(2*v)+286*cos(3*v)+310*cos(4*v)+202*cos(5*v)-95*cos(6*v)-38*cos(7*v)+19*cos(8*v)+246)*si"
     "n((v/2))^3+3*(5*v^2-17)*cos((17*v/2))-3*(v^2-4)*cos((19*v/2)))))*v-46080*cos((v/2))^2*(2*cos(v)+"
     "2*cos(2*v)+2*cos(3*v)+2*cos(4*v)+2*cos(6*v)+1)*sin((v/2))^5"},
    {"1/2621440", -5, -5, -12,
     "-61440*cos((v/2))^2*(22*cos(v)+22*cos(2*v)+21*cos(3*v)+16*cos(4*v)+13*cos(5*v)+9*cos(6*v)+6*cos("
     "7*v)+cos(8*v)+11)*sin((v/2))^5+2*v*(604527*v^4-31000*v^2+6600)*cos((v/2))+v*(1090199*v^4-5920*v^"
     "2-17520)*cos((3*v/2))+v*((951159*v^4-47360*v^2-7560)*cos((5*v/2))+5*(148753*v^4-10576*v^2+3480)*"
     "cos((7*v/2))+(444741*v^4+48080*v^2-7200)*cos((9*v/2))+120*(-132*cos((11*v/2))+60*cos((13*v/2))+2"
     "18*cos((15*v/2))-36*cos((17*v/2))-118*cos((19*v/2))+15*cos((21*v/2))+7*cos((23*v/2)))+v*(11*v*(1"
     "5863*v^2+8960)*cos((11*v/2))+v*(32989*v^2+37280)*cos((13*v/2))-40*(8*(10601*cos(v)+9368*cos(2*v)"
     "+7755*cos(3*v)+5858*cos(4*v)+3103*cos(5*v)+538*cos(6*v)-457*cos(7*v)-154*cos(8*v)+70*cos(9*v)+14"
     "*cos(10*v)+5412)*sin((v/2))^3+v*(383*cos((15*v/2))+103*cos((17*v/2))+4*(-26*cos((19*v/2))+2*cos("
     "(21*v/2))+cos((23*v/2)))))))"},
    {"-1/983040", -5, -3, -12,
     "-15360*cos((v/2))^2*(110*cos(v)+110*cos(2*v)+108*cos(3*v)+78*cos(4*v)+66*cos(5*v)+44*cos(6*v)+32"
     "*cos(7*v)+2*cos(8*v)+55)*sin((v/2))^5+6*v*(252263*v^4-15900*v^2+3720)*cos((v/2))+v*(1374791*v^4+"
     "33000*v^2-30780)*cos((3*v/2))+v*(5*(239129*v^4-18288*v^2-2052)*cos((5*v/2))+15*(62139*v^4-4720*v"
     "^2+2040)*cos((7*v/2))+(553817*v^4+79080*v^2-12600)*cos((9*v/2))+180*(-143*cos((11*v/2))+59*cos(("
     "13*v/2))+237*cos((15*v/2))-75*cos((17*v/2))-104*cos((19*v/2))+28*cos((21*v/2))+2*cos((23*v/2)))+"
     "v*(165*v*(1243*v^2+760)*cos((11*v/2))+v*(32989*v^2+42360)*cos((13*v/2))-20*(8*(26818*cos(v)+2330"
     "2*cos(2*v)+19472*cos(3*v)+14923*cos(4*v)+7646*cos(5*v)+934*cos(6*v)-1360*cos(7*v)-200*cos(8*v)+1"
     "94*cos(9*v)+11*cos(10*v)+13530)*sin((v/2))^3+3*v*(426*cos((15*v/2))+5*cos((17*v/2))-77*cos((19*v"
     "/2))+15*cos((21*v/2))+cos((23*v/2))))))"},
    {"1/15728640", -5, -5, -12,
     "-184320*cos((v/2))^2*(330*cos(v)+326*cos(2*v)+298*cos(3*v)+250*cos(4*v)+188*cos(5*v)+142*cos(6*v"
     ")+80*cos(7*v)+32*cos(8*v)+4*cos(9*v)+165)*sin((v/2))^5+480*v*(109813*v^4-4160*v^2+384)*cos((v/2)"
     ")+12*v*(4062663*v^4-134080*v^2-19200)*cos((3*v/2))+v*(12*(3490311*v^4-138560*v^2-16800)*cos((5*v"
     "/2))+(32182799*v^4-992640*v^2+192960)*cos((7*v/2))+(20304031*v^4+1640640*v^2-74160)*cos((9*v/2))"
     "+720*(-627*cos((11*v/2))+532*cos((13*v/2))+788*cos((15*v/2))-17*cos((17*v/2))-385*cos((19*v/2))-"
     "176*cos((21*v/2))+52*cos((23*v/2))+12*cos((25*v/2)))+v*(v*(32989*(17*cos((15*v/2))+cos((17*v/2))"
     ")*v^2+176*(54469*v^2+16860)*cos((11*v/2))+16*(192181*v^2+97440)*cos((13*v/2))+480*(352*cos((15*v"
     "/2))-232*cos((17*v/2))+22*cos((19*v/2))+68*cos((21*v/2))-11*cos((23*v/2))-3*cos((25*v/2))))-1920"
     "*(77156*cos(v)+69308*cos(2*v)+57403*cos(3*v)+42088*cos(4*v)+23663*cos(5*v)+7258*cos(6*v)-332*cos"
     "(7*v)-962*cos(8*v)-52*cos(9*v)+152*cos(10*v)+22*cos(11*v)+40106)*sin((v/2))^3))"},
    {"-1/983040", -5, -3, -12,
     "-92160*cos((v/2))^2*(66*cos(v)+66*cos(2*v)+61*cos(3*v)+50*cos(4*v)+37*cos(5*v)+29*cos(6*v)+16*co"
     "s(7*v)+5*cos(8*v)+33)*sin((v/2))^5+6*v*(889361*v^4-36900*v^2+5880)*cos((v/2))+v*(4932719*v^4-121"
     "800*v^2-42840)*cos((3*v/2))+v*(3*(1410343*v^4-62640*v^2-11880)*cos((5*v/2))+48*(68101*v^4-3465*v"
     "^2+1110)*cos((7*v/2))+4*(502843*v^4+53175*v^2-2790)*cos((9*v/2))+3*(11*(26231*v^4+10980*v^2-2520"
     ")*cos((11*v/2))+(78023*v^4+46140*v^2+19560)*cos((13*v/2))+2*((4829*v^4-1870*v^2+13890)*cos((15*v"
     "/2))-10*(8*v*(31262*cos(v)+27954*cos(2*v)+23122*cos(3*v)+17249*cos(4*v)+9324*cos(5*v)+2061*cos(6"
     "*v)-650*cos(7*v)-363*cos(8*v)+74*cos(9*v)+55*cos(10*v)+16236)*sin((v/2))^3+3*(67*v^2+99)*cos((17"
     "*v/2))+21*(32-5*v^2)*cos((19*v/2))+(84-31*v^2)*cos((21*v/2))+15*(v^2-6)*cos((23*v/2))))))"},
    {"1/7864320", -5, -5, -12,
     "-122880*cos((v/2))^2*(462*cos(v)+452*cos(2*v)+417*cos(3*v)+344*cos(4*v)+271*cos(5*v)+191*cos(6*v"
     ")+118*cos(7*v)+45*cos(8*v)+10*cos(9*v)+231)*sin((v/2))^5+2*v*(24403159*v^4-927600*v^2+75600)*cos"
     "((v/2))+2*v*(22599203*v^4-730560*v^2-111600)*cos((3*v/2))+v*(6*(6473137*v^4-267360*v^2-17880)*co"
     "s((5*v/2))+2*(14893043*v^4-320160*v^2+65880)*cos((7*v/2))+6*(3171377*v^4+240960*v^2-28320)*cos(("
     "9*v/2))+720*(-264*cos((11*v/2))+302*cos((13*v/2))+664*cos((15*v/2))+50*cos((17*v/2))-348*cos((19"
     "*v/2))-127*cos((21*v/2))+5*cos((23*v/2))+20*cos((25*v/2)))+v*(v*(66*(142321*v^2+36320)*cos((11*v"
     "/2))+2*(1641761*v^2+744960)*cos((13*v/2))+(729971*v^2+262800)*cos((15*v/2))+(84227*v^2-61680)*co"
     "s((17*v/2))+480*(24*cos((19*v/2))+32*cos((21*v/2))+5*cos((23*v/2))-5*cos((25*v/2))))-640*(214989"
     "*cos(v)+192536*cos(2*v)+159857*cos(3*v)+116994*cos(4*v)+66367*cos(5*v)+23162*cos(6*v)+1179*cos(7"
     "*v)-2150*cos(8*v)-278*cos(9*v)+270*cos(10*v)+110*cos(11*v)+111232)*sin((v/2))^3))"},
  },
  { // PF-D4
    {"-1/3145728", -6, -7, -12,
     "(11858*v^6-1512*v^4+1005*v^2-60)*cos((v/2))+9*(1540*v^6+280*v^4-271*v^2+20)*cos((3*v/2))+60*(-co"
     "s((5*v/2))-6*cos((7*v/2))+8*cos((9*v/2))-8*cos((13*v/2))+6*cos((15*v/2))+cos((17*v/2))-3*cos((19"
     "*v/2))+cos((21*v/2)))+v*(-3072*cos((v/2))^2*(18*cos(v)+18*cos(2*v)+18*cos(3*v)+3*cos(4*v)+14*cos"
     "(5*v)+4*cos(6*v)-7*cos(7*v)+9)*sin((v/2))^5-16*v^2*(2244*cos(v)+1419*cos(2*v)+1480*cos(3*v)+914*"
     "cos(4*v)-961*cos(5*v)-535*cos(6*v)+428*cos(7*v)+104*cos(8*v)-77*cos(9*v)+1122)*sin((v/2))^3+v*(1"
     "1044*v^4-3816*v^2+1401)*cos((5*v/2))+v*((4675*v^4+180*v^2+2358)*cos((7*v/2))+(803*v^4+5028*v^2-5"
     "376)*cos((9*v/2))+3*(44*(18-13*v^2)*cos((11*v/2))+4*(283-155*v^2)*cos((13*v/2))+2*(212*v^2-525)*"
     "cos((15*v/2))+(40*v^2-71)*cos((17*v/2))+(285-92*v^2)*cos((19*v/2))+(20*v^2-71)*cos((21*v/2)))))"},
    {"1/3145728", -6, -7, -12,
     "2*(77077*v^6-672*v^4-1074*v^2+120)*cos((v/2))+6*(23705*v^6-1920*v^4-22*v^2+40)*cos((3*v/2))-240*"
     "(4*cos((5*v/2))-cos((7*v/2))-2*cos((9*v/2))+2*cos((13*v/2))+cos((15*v/2))-4*cos((17*v/2))+cos((1"
     "9*v/2))+2*cos((21*v/2))-cos((23*v/2)))+v*(-6144*cos((v/2))^2*(108*cos(v)+108*cos(2*v)+77*cos(3*v"
     ")+70*cos(4*v)+43*cos(5*v)+21*cos(6*v)-6*cos(7*v)-13*cos(8*v)+54)*sin((v/2))^5-32*v^2*(11668*cos("
     "v)+10196*cos(2*v)+7776*cos(3*v)+2663*cos(4*v)-1296*cos(5*v)-1641*cos(6*v)+164*cos(7*v)+661*cos(8"
     "*v)+12*cos(9*v)-107*cos(10*v)+6732)*sin((v/2))^3+v*(113707*v^4-6972*v^2+7080)*cos((5*v/2))+v*(67"
     "925*v^4+10140*v^2-8412)*cos((7*v/2))+v*(3*(8283*v^4+4572*v^2-1120)*cos((9*v/2))+11*(365*v^4-12*v"
     "^2+432)*cos((11*v/2))+12*((742-505*v^2)*cos((13*v/2))+(57*v^2-124)*cos((15*v/2))+(185*v^2-689)*c"
     "os((17*v/2))+(143-41*v^2)*cos((19*v/2))+2*(86-15*v^2)*cos((21*v/2))+(10*v^2-59)*cos((23*v/2)))))"},
    {"-1/1572864", -6, -7, -12,
     "(411884*v^6-10092*v^4-5115*v^2+660)*cos((v/2))+3*(126445*v^6-7800*v^4+1598*v^2-80)*cos((3*v/2))+"
     "60*(-14*cos((5*v/2))-cos((7*v/2))+13*cos((9*v/2))-13*cos((13*v/2))+cos((15*v/2))+14*cos((17*v/2)"
     ")+cos((19*v/2))-10*cos((21*v/2))-cos((23*v/2))+3*cos((25*v/2)))+v*(-3072*cos((v/2))^2*(594*cos(v"
     ")+546*cos(2*v)+458*cos(3*v)+355*cos(4*v)+244*cos(5*v)+108*cos(6*v)-3*cos(7*v)-40*cos(8*v)-18*cos"
     "(9*v)+297)*sin((v/2))^5+2*v*(148951*v^4-3768*v^2+1086)*cos((5*v/2))+v*(186340*v^4+20100*v^2-8697"
     ")*cos((7*v/2))+v*(33*(2648*v^4+636*v^2-187)*cos((9*v/2))+132*(205*v^4+29*v^2+81)*cos((11*v/2))+1"
     "1*(365*v^4-450*v^2+1191)*cos((13*v/2))-3*(731*cos((15*v/2))+3298*cos((17*v/2))+593*cos((19*v/2))"
     "-1028*cos((21*v/2))-149*cos((23*v/2))+147*cos((25*v/2)))-2*v*(8*(64294*cos(v)+54653*cos(2*v)+384"
     "93*cos(3*v)+15944*cos(4*v)-1305*cos(5*v)-4899*cos(6*v)-676*cos(7*v)+1690*cos(8*v)+633*cos(9*v)-2"
     "30*cos(10*v)-117*cos(11*v)+34074)*sin((v/2))^3+3*v*(171*cos((15*v/2))-365*cos((17*v/2))-73*cos(("
     "19*v/2))+10*(9*cos((21*v/2))+cos((23*v/2))-cos((25*v/2)))))))"},
    {"1/3145728", -6, -7, -12,
     "4*(674575*v^6-23478*v^4-4140*v^2+720)*cos((v/2))+4*(610445*v^6-25050*v^4+2328*v^2-240)*cos((3*v/"
     "2))+240*(-12*cos((5*v/2))-9*cos((7*v/2))+19*cos((9*v/2))-19*cos((13*v/2))+9*cos((15*v/2))+11*cos"
     "((17*v/2))+cos((19*v/2))-7*cos((21*v/2))-5*cos((23*v/2))+3*cos((25*v/2))+cos((27*v/2)))+v*(-6144"
     "*cos((v/2))^2*(1947*cos(v)+1780*cos(2*v)+1532*cos(3*v)+1153*cos(4*v)+812*cos(5*v)+376*cos(6*v)+3"
     "5*cos(7*v)-80*cos(8*v)-64*cos(9*v)-11*cos(10*v)+990)*sin((v/2))^5+v*(1934185*v^4-35376*v^2-1440)"
     "*cos((5*v/2))+v*(1264615*v^4+92640*v^2-22932)*cos((7*v/2))+v*((642895*v^4+114648*v^2-39588)*cos("
     "(9*v/2))+11*(21955*v^4+2712*v^2+5508)*cos((11*v/2))+2*(-16*v*(210376*cos(v)+176605*cos(2*v)+1228"
     "22*cos(3*v)+57558*cos(4*v)+5448*cos(5*v)-9243*cos(6*v)-2316*cos(7*v)+2721*cos(8*v)+1892*cos(9*v)"
     "-50*cos(10*v)-362*cos(11*v)-61*cos(12*v)+109790)*sin((v/2))^3+(30745*v^4-5910*v^2+33852)*cos((13"
     "*v/2))+(4015*v^4-1242*v^2-8928)*cos((15*v/2))+6*(5*(87*v^2-608)*cos((17*v/2))+(261*v^2-1220)*cos"
     "((19*v/2))+5*(130-17*v^2)*cos((21*v/2))+(499-75*v^2)*cos((23*v/2))+3*(5*v^2-39)*cos((25*v/2))+(5"
     "*v^2-41)*cos((27*v/2))))))"},
    {"-1/3145728", -6, -7, -12,
     "5*(1193060*v^6-41904*v^4-5997*v^2+1020)*cos((v/2))+60*(-14*cos((3*v/2))-126*cos((5*v/2))+3*cos(("
     "7*v/2))+68*cos((9*v/2))-68*cos((13*v/2))-4*cos((15*v/2))+113*cos((17*v/2))+9*cos((19*v/2))-63*co"
     "s((21*v/2))-22*cos((23*v/2))+5*cos((25*v/2))+13*cos((27*v/2))+cos((29*v/2)))+v*(-3072*cos((v/2))"
     "^2*(8642*cos(v)+8000*cos(2*v)+6715*cos(3*v)+5297*cos(4*v)+3528*cos(5*v)+1774*cos(6*v)+335*cos(7*"
     "v)-291*cos(8*v)-234*cos(9*v)-84*cos(10*v)-5*cos(11*v)+4438)*sin((v/2))^5+6*v*(900240*v^4-34950*v"
     "^2+1097)*cos((3*v/2))+2*v*(2142800*v^4-21390*v^2+4761)*cos((5*v/2))+v*((2856205*v^4+170220*v^2-8"
     "1459)*cos((7*v/2))+3*(511335*v^4+68340*v^2-6064)*cos((9*v/2))+44*(14405*v^4+1962*v^2+2133)*cos(("
     "11*v/2))+3*(37216*cos((13*v/2))-1456*cos((15*v/2))-26299*cos((17*v/2))-9051*cos((19*v/2))+3561*c"
     "os((21*v/2))+2870*cos((23*v/2))+257*cos((25*v/2))-503*cos((27*v/2))-35*cos((29*v/2)))+v*(v*(20*("
     "9515*v^2-318)*cos((13*v/2))+9*(4235*v^2-684)*cos((15*v/2))+5*(803*v^2+2052)*cos((17*v/2))+12*(40"
     "4*cos((19*v/2))-84*cos((21*v/2))-100*cos((23*v/2))-12*cos((25*v/2))+15*cos((27*v/2))+cos((29*v/2"
     "))))-16*(923815*cos(v)+780435*cos(2*v)+544332*cos(3*v)+265090*cos(4*v)+54870*cos(5*v)-23058*cos("
     "6*v)-10352*cos(7*v)+8726*cos(8*v)+6750*cos(9*v)+651*cos(10*v)-1000*cos(11*v)-444*cos(12*v)-25*co"
     "s(13*v)+488520)*sin((v/2))^3)))"},
    {"1/3145728", -6, -7, -12,
     "4*(2363372*v^6-84162*v^4-11175*v^2+1860)*cos((v/2))+24*(355960*v^6-12795*v^4+476*v^2-80)*cos((3*"
     "v/2))+240*(-39*cos((5*v/2))-3*cos((7*v/2))+23*cos((9*v/2))-23*cos((13*v/2))+2*cos((15*v/2))+35*c"
     "os((17*v/2))+6*cos((19*v/2))-21*cos((21*v/2))-10*cos((23*v/2))+2*cos((25*v/2))+4*cos((27*v/2))+c"
     "os((29*v/2)))+v*(-6144*cos((v/2))^2*(6889*cos(v)+6340*cos(2*v)+5369*cos(3*v)+4201*cos(4*v)+2829*"
     "cos(5*v)+1439*cos(6*v)+331*cos(7*v)-177*cos(8*v)-180*cos(9*v)-69*cos(10*v)-10*cos(11*v)+3530)*si"
     "n((v/2))^5+4*v*(1700006*v^4-14241*v^2-1503)*cos((5*v/2))+4*v*(1147190*v^4+60825*v^2-25641)*cos(("
     "7*v/2))+v*(12*(210419*v^4+24831*v^2-1957)*cos((9*v/2))+44*(24817*v^4+3201*v^2+3159)*cos((11*v/2)"
     ")+(356345*v^4+7080*v^2+156144)*cos((13*v/2))-12*(262*cos((15*v/2))+8737*cos((17*v/2))+3825*cos(("
     "19*v/2))-2*(498*cos((21*v/2))+523*cos((23*v/2))+67*(cos((25*v/2))-cos((27*v/2))))+35*cos((29*v/2"
     ")))+v*(v*((82599*v^2-6408)*cos((15*v/2))+15*(803*v^2+864)*cos((17*v/2))+(803*v^2+7584)*cos((19*v"
     "/2))-12*(81*cos((21*v/2))+135*cos((23*v/2))+23*cos((25*v/2))-15*cos((27*v/2))-4*cos(((29)*v)/(2)"
     ")))-32*(731642*cos(v)+616515*cos(2*v)+431394*cos(3*v)+217139*cos(4*v)+54930*cos(5*v)-9918*cos(6*"
     "v)-7072*cos(7*v)+5350*cos(8*v)+4914*cos(9*v)+747*cos(10*v)-614*cos(11*v)-339*cos(12*v)-50*cos(13"
     "*v)+386010)*sin((v/2))^3)))"},
    {"-1/1572864", -6, -7, -12,
     "44*(14828*v^4+1779*v^2+1971)*cos((11*v/2))*v^2+48*(491*v^2+42)*sin((v/2))*v+2*(2652-18397*v^2)*s"
     "in((3*v/2))*v-2*(46961*v^2+1572)*sin((5*v/2))*v-2*(84467*v^2+996)*sin((7*v/2))*v+92*(132-1315*v^"
     "2)*sin((9*v/2))*v+12*(6461*v^2-1752)*sin((11*v/2))*v+12*(10789*v^2-2244)*sin((13*v/2))*v+16*(292"
     "1*v^2+987)*sin((15*v/2))*v+112*(219-122*v^2)*sin((17*v/2))*v+16*(570-1019*v^2)*sin((19*v/2))*v+8"
     "*(233*v^2-1146)*sin((21*v/2))*v+4*(1075*v^2-2004)*sin((23*v/2))*v+10*(25*v^2+12)*sin((25*v/2))*v"
     "+2*(372-131*v^2)*sin((27*v/2))*v+30*(12-5*v^2)*sin((29*v/2))*v+(5494852*v^6-200688*v^4-24198*v^2"
     "+4200)*cos((v/2))+(4966940*v^6-164820*v^4+6873*v^2-1500)*cos((3*v/2))+(3957316*v^6-37644*v^4-156"
     "39*v^2-3900)*cos((5*v/2))+(2678500*v^6+135480*v^4-37413*v^2-2340)*cos((7*v/2))+2*(742786*v^6+871"
     "56*v^4-15261*v^2+2220)*cos((9*v/2))+(217855*v^6+7320*v^4+91506*v^2-4440)*cos((13*v/2))+4*(13079*"
     "v^6-318*v^4-2646*v^2+540)*cos((15*v/2))+2*(4180*v^6+2820*v^4-25347*v^2+1740)*cos((17*v/2))+(737*"
     "v^6+4776*v^4-28968*v^2+960)*cos((19*v/2))-6*(54*v^4-863*v^2+380)*cos((21*v/2))-24*(45*v^4-347*v^"
     "2+80)*cos((23*v/2))+9*(-8*v^4+35*v^2+60)*cos((25*v/2))+3*(20*v^4-197*v^2+140)*cos((27*v/2))+9*(4"
     "*v^4-35*v^2+20)*cos((29*v/2))"},
  },
  { // PF-D5
    {"1/20971520", -7, -9, -12,
     "-122880*cos((v/2))^4*(2*cos(v)+2*cos(2*v)+2*cos(3*v)+2*cos(4*v)+2*cos(6*v)+1)*sin((v/2))^7+70*v*"
     "(396*v^6+72*v^4-95*v^2+20)*cos((v/2))+30*v*(616*v^6-504*v^4+335*v^2-20)*cos((3*v/2))+v*(60*(3*v^"
     "2*(44*v^4+52*v^2+35)-80)*cos((5*v/2))+30*(66*v^6+408*v^4-979*v^2+220)*cos((7*v/2))+100*(6*cos((9"
     "*v/2))-88*cos((11*v/2))+60*cos((13*v/2))+33*cos((15*v/2))-51*cos((17*v/2))+6*cos((19*v/2))+12*co"
     "s((21*v/2))-4*cos((23*v/2)))+v*(-2560*cos((v/2))^2*(84*cos(v)+84*cos(2*v)-13*cos(3*v)+84*cos(4*v"
     ")+cos(5*v)-115*cos(6*v)+31*cos(8*v)+42)*sin((v/2))^5-16*v^2*(641*cos(v)+2520*cos(2*v)-93*cos(3*v"
     ")-5564*cos(4*v)+13*cos(5*v)+3882*cos(6*v)-cos(7*v)-1292*cos(8*v)+174*cos(10*v)+1260)*sin((v/2))^"
     "3+5*v*((44*v^4-2808*v^2+3966)*cos((9*v/2))+88*(44-9*v^2)*cos((11*v/2))+24*(73*v^2-212)*cos((13*v"
     "/2))-3*(24*v^2+121)*cos((15*v/2))+3*(735-184*v^2)*cos((17*v/2))+6*(20*v^2-71)*cos((19*v/2))+12*("
     "6*v^2-29)*cos((21*v/2))+4*(29-6*v^2)*cos((23*v/2)))))"},
    {"-1/62914560", -7, -9, -12,
     "-737280*cos((v/2))^4*(12*cos(v)+12*cos(2*v)+12*cos(3*v)+7*cos(4*v)+10*cos(5*v)+2*cos(6*v)+5*cos("
     "7*v)+6)*sin((v/2))^7+180*v*(4620*v^6-672*v^4+13*v^2+120)*cos((v/2))+45*v*(14256*v^6+2344*v^4+198"
     "7*v^2-1300)*cos((3*v/2))+v*(45*(8184*v^6+1608*v^4-6581*v^2+1420)*cos((5*v/2))+45*(3256*v^6-588*v"
     "^4+4583*v^2-420)*cos((7*v/2))-300*(123*cos((9*v/2))-154*cos((11*v/2))+130*cos((13*v/2))-96*cos(("
     "15*v/2))-84*cos((17*v/2))+171*cos((19*v/2))-33*cos((21*v/2))-49*cos((23*v/2))+19*cos((25*v/2)))+"
     "v*(-7680*cos((v/2))^2*(1008*cos(v)+497*cos(2*v)+814*cos(3*v)+140*cos(4*v)-191*cos(5*v)-231*cos(6"
     "*v)-364*cos(7*v)+62*cos(8*v)+137*cos(9*v)+504)*sin((v/2))^5-16*v^2*(79446*cos(v)+26700*cos(2*v)-"
     "54673*cos(3*v)-35424*cos(4*v)-6282*cos(5*v)+23632*cos(6*v)+23514*cos(7*v)-7782*cos(8*v)-11000*co"
     "s(9*v)+1044*cos(10*v)+1755*cos(11*v)+14510)*sin((v/2))^3+15*v*(3*(792*v^4-652*v^2+1075)*cos((9*v"
     "/2))+22*(12*v^4-102*v^2-47)*cos((11*v/2))+2*(582*v^2+1891)*cos((13*v/2))+32*(73*v^2-342)*cos((15"
     "*v/2))+24*(43-36*v^2)*cos((17*v/2))+3*(2131-300*v^2)*cos((19*v/2))+(364*v^2-1887)*cos((21*v/2))+"
     "(132*v^2-1151)*cos((23*v/2))+(461-60*v^2)*cos((25*v/2)))))"},
    {"1/31457280", -7, -9, -12,
     "-368640*cos((v/2))^4*(66*cos(v)+66*cos(2*v)+56*cos(3*v)+56*cos(4*v)+30*cos(5*v)+36*cos(6*v)+10*c"
     "os(7*v)+10*cos(8*v)+33)*sin((v/2))^7+120*v*(17424*v^6-765*v^4+716*v^2-155)*cos((v/2))+45*v*(3702"
     "6*v^6+92*v^4-5159*v^2+1100)*cos((3*v/2))+v*(15*(70422*v^6+10188*v^4+9929*v^2-4220)*cos((5*v/2))+"
     "300*(161*cos((7*v/2))+33*cos((9*v/2))-319*cos((11*v/2))+275*cos((13*v/2))+81*cos((15*v/2))-123*c"
     "os((17*v/2))+20*cos((19*v/2))-72*cos((21*v/2))+35*(cos((23*v/2))+cos((25*v/2)))-18*cos((27*v/2))"
     ")+v*(-7680*cos((v/2))^2*(2233*cos(v)+2261*cos(2*v)+1114*cos(3*v)+831*cos(4*v)-199*cos(5*v)-879*c"
     "os(6*v)-369*cos(7*v)-102*cos(8*v)+137*cos(9*v)+121*cos(10*v)+1386)*sin((v/2))^5-16*v^2*(106239*c"
     "os(v)+46080*cos(2*v)-45422*cos(3*v)-97266*cos(4*v)-7053*cos(5*v)+48138*cos(6*v)+23511*cos(7*v)-2"
     "538*cos(8*v)-10990*cos(9*v)-5154*cos(10*v)+1755*cos(11*v)+1270*cos(12*v)+93890)*sin((v/2))^3+15*"
     "v*((36*v^2*(968*v^2+57)-15475)*cos((7*v/2))+(12672*v^4-8132*v^2+20199)*cos((9*v/2))+11*(270*v^4-"
     "138*v^2+1105)*cos((11*v/2))+(330*v^4+3138*v^2-18373)*cos((13*v/2))+3*(284*v^2-921)*cos((15*v/2))"
     "+3*(453-68*v^2)*cos((17*v/2))+2*(1081-267*v^2)*cos((19*v/2))+6*(408-41*v^2)*cos((21*v/2))+(228*v"
     "^2-1609)*cos((23*v/2))+5*(12*v^2-131)*cos((25*v/2))+4*(93-10*v^2)*cos((27*v/2)))))"},
    {nullptr, 0, 0, 0, nullptr},
    {nullptr, 0, 0, 0, nullptr},
    {nullptr, 0, 0, 0, nullptr},
    {"1/31457280", -7, -9, -12,
     "-737280*cos((v/2))^4*(457*cos(v)+436*cos(2*v)+406*cos(3*v)+331*cos(4*v)+281*cos(5*v)+181*cos(6*v"
     ")+131*cos(7*v)+56*cos(8*v)+26*cos(9*v)+5*cos(10*v)+cos(11*v)+230)*sin((v/2))^7+30*v*((3960*v^2*("
     "216*v^2-5)-8761)*v^2+1780)*cos((v/2))+15*v*(1435984*v^6+22000*v^4-3297*v^2-10980)*cos((3*v/2))+v"
     "*(45*(337392*v^6+11440*v^4-27653*v^2+4460)*cos((5*v/2))-300*(219*cos((7*v/2))+603*cos((9*v/2))-3"
     "00*cos((11*v/2))+28*cos((13*v/2))-756*cos((15*v/2))-148*cos((17*v/2))+776*cos((19*v/2))+96*cos(("
     "21*v/2))-83*cos((23*v/2))-115*cos((25*v/2))-63*cos((27*v/2))+31*cos((29*v/2))+7*cos((31*v/2))+3*"
     "cos((33*v/2)))+v*(-7680*cos((v/2))^2*(32205*cos(v)+25293*cos(2*v)+19114*cos(3*v)+8361*cos(4*v)-2"
     "41*cos(5*v)-4841*cos(6*v)-5127*cos(7*v)-1558*cos(8*v)+452*cos(9*v)+766*cos(10*v)+452*cos(11*v)+9"
     "5*cos(12*v)+17*cos(13*v)+16488)*sin((v/2))^5+45*v*(1408*(141*v^4+v^2)+24571)*cos((7*v/2))+15*v*("
     "352*(820*v^2-49)*v^2+65325)*cos((9*v/2))+v*(-16*v*(1391199*cos(v)+496638*cos(2*v)-298296*cos(3*v"
     ")-433962*cos(4*v)-149583*cos(5*v)+183078*cos(6*v)+208215*cos(7*v)+31836*cos(8*v)-54047*cos(9*v)-"
     "36606*cos(10*v)-7569*cos(11*v)+4842*cos(12*v)+3624*cos(13*v)+810*cos(14*v)+137*cos(15*v)+794124)"
     "*sin((v/2))^3+90*(18975*v^4-2632*v^2+4838)*cos((11*v/2))+30*(18117*v^4+2184*v^2-10934)*cos((13*v"
     "/2))+15*(-2372*cos((17*v/2))+25024*cos((19*v/2))+6864*cos((21*v/2))-925*cos((23*v/2))-3401*cos(("
     "25*v/2))-1173*cos((27*v/2))+509*cos((29*v/2))+125*cos((31*v/2))+45*cos((33*v/2)))+30*((36*(22*v^"
     "2+7)*cos((17*v/2))+9*(11*v^2-168)*cos((19*v/2))+(11*v^2-488)*cos((21*v/2))+48*cos((23*v/2))+192*"
     "cos((25*v/2))+56*cos((27*v/2))-2*(12*cos((29*v/2))+3*cos((31*v/2))+cos((33*v/2))))*v^2+(4488*v^4"
     "+5348*v^2-33558)*cos((15*v/2))))))"},
  },
  { // PF-D6
    {nullptr, 0, 0, 0, nullptr},
    {"1/31457280", -8, -11, -9,
     "v*(8*(41029*v^4-6060*v^2-2340)*cos(v)+(216658*v^4-231600*v^2+29520)*cos(2*v)+720*(8*cos(3*v)-73*"
     "cos(4*v)+46*cos(5*v)+20*cos(6*v)-26*cos(7*v)+58*cos(8*v)-8*cos(9*v)-53*cos(10*v)+6*cos(11*v)+13*"
     "cos(12*v))+v*(v*(4*(47520-64489*v^2)*cos(3*v)+240*(889*cos(4*v)-472*cos(5*v)+142*cos(6*v)-427*co"
     "s(7*v)-682*cos(8*v)+393*cos(9*v)+383*cos(10*v)-84*cos(11*v)-71*cos(12*v))+v*(2*v*(15728640*v*(42"
     "*cos(2*v)+47)*sin((v/2))^9*cos((v/2))^11-53557*cos(4*v)-23336*cos(5*v)-10180*cos(6*v)+62776*cos("
     "7*v)+31222*cos(8*v)-28732*cos(9*v)-15557*cos(10*v)+4554*cos(11*v)+2637*cos(12*v))-3*(4524*sin(v)"
     "+89649*sin(2*v)-109162*sin(3*v)-66107*sin(4*v)+12508*sin(5*v)-17082*sin(6*v)+55388*sin(7*v)+4450"
     "8*sin(8*v)-32396*sin(9*v)-22567*sin(10*v)+5770*sin(11*v)+3929*sin(12*v))))-2400*(48*cos(v)-83*co"
     "s(2*v)+134*cos(3*v)-160*cos(4*v)-76*cos(5*v)-19*cos(6*v)-100*cos(7*v)+46*cos(8*v)+54*cos(9*v)+24"
     ")*sin(v)^3))-4*(28927*v^5-18240*v^3+1080*v-2520*sin(v)+630*sin(2*v)+1260*sin(3*v)-1890*sin(4*v)+"
     "1260*sin(5*v)+1260*sin(6*v)-1890*sin(7*v)+1260*sin(8*v)+630*sin(9*v)-1890*sin(10*v)+630*sin(12*v"
     "))"},
    {"-1/31457280", -8, -11, -9,
     "4*(221284*v^5-37695*v^3-9090*v-1575*sin(v)+5670*sin(2*v)+2520*sin(3*v)-10080*sin(4*v)+4095*sin(5"
     "*v)+4095*sin(6*v)-10080*sin(7*v)+2520*sin(8*v)+4095*sin(9*v)-1575*sin(10*v)+2520*sin(11*v)-1575*"
     "sin(13*v))+v*(-2*(29854*v^4+91035*v^2-24390)*cos(v)-180*(402*cos(2*v)+154*cos(3*v)-804*cos(4*v)+"
     "973*cos(5*v)-115*cos(6*v)-1308*cos(7*v)+374*cos(8*v)+251*cos(9*v)+cos(10*v)+326*cos(11*v)-60*cos"
     "(12*v)-125*cos(13*v))+v*(1200*(159*cos(v)-968*cos(2*v)+1401*cos(3*v)-459*cos(4*v)+995*cos(5*v)+1"
     "205*cos(6*v)-223*cos(7*v)+73*cos(8*v)-44*(5*cos(9*v)+6)-247*cos(10*v))*sin(v)^3+4*v*(70204*v^2+9"
     "8445)*cos(2*v)+v*((366842*v^2-234180)*cos(3*v)+30*(9964*cos(4*v)+32995*cos(5*v)-25405*cos(6*v)-2"
     "2548*cos(7*v)+4066*cos(8*v)+105*cos(9*v)+4791*cos(10*v)+4542*cos(11*v)-1516*cos(12*v)-1219*cos(1"
     "3*v))+v*(2*v*(15728640*v*(294*cos(v)+70*cos(3*v)-1)*sin((v/2))^9*cos((v/2))^11-517606*cos(4*v)-2"
     "35773*cos(5*v)+227655*cos(6*v)+127788*cos(7*v)+14656*cos(8*v)-3946*cos(9*v)-39071*cos(10*v)-1866"
     "1*cos(11*v)+8590*cos(12*v)+4745*cos(13*v))-3*(222705*sin(v)-265046*sin(2*v)+119729*sin(3*v)-3324"
     "66*sin(4*v)-319876*sin(5*v)+278964*sin(6*v)+170124*sin(7*v)-3966*sin(8*v)+739*sin(9*v)-48110*sin"
     "(10*v)-30601*sin(11*v)+12050*sin(12*v)+7780*sin(13*v))))))"},
    {"1/6291456", -8, -11, -9,
     "v*(8*(95239*v^4+132*v^2-6660)*cos(v)+720*(37*cos(2*v)+36*cos(3*v)-129*cos(4*v)+92*cos(5*v)+40*co"
     "s(6*v)-36*cos(7*v)+110*cos(8*v)-30*cos(9*v)-77*cos(10*v)+8*cos(11*v)-3*cos(12*v)+4*cos(13*v)+8*c"
     "os(14*v))+v*(-160*(3540*cos(v)-4081*cos(2*v)+4258*cos(3*v)-6420*cos(4*v)-2416*cos(5*v)-1709*cos("
     "6*v)-3480*cos(7*v)+1352*cos(8*v)+946*cos(9*v)+420*cos(10*v)+452*cos(11*v)-122)*sin(v)^3+22*v*(92"
     "23*v^2-12168)*cos(2*v)+v*(4*(76560-94681*v^2)*cos(3*v)+48*(7741*cos(4*v)-4350*cos(5*v)+1490*cos("
     "6*v)-4837*cos(7*v)-5698*cos(8*v)+2835*cos(9*v)+2127*cos(10*v)+178*cos(11*v)+205*cos(12*v)-228*co"
     "s(13*v)-176*cos(14*v))+v*(2*v*(22020096*v*(70*cos(2*v)+10*cos(4*v)+63)*sin((v/2))^9*cos((v/2))^1"
     "1-55381*cos(4*v)-74360*cos(5*v)-19668*cos(6*v)+94024*cos(7*v)+43706*cos(8*v)-24996*cos(9*v)-1483"
     "3*cos(10*v)-3270*cos(11*v)-1099*cos(12*v)+1808*cos(13*v)+984*cos(14*v))+210232*sin(v)-456433*sin"
     "(2*v)+711254*sin(3*v)+322575*sin(4*v)-9720*sin(5*v)+108420*sin(6*v)-311124*sin(7*v)-200610*sin(8"
     "*v)+107672*sin(9*v)+68535*sin(10*v)+11650*sin(11*v)+6143*sin(12*v)-8148*sin(13*v)-5090*sin(14*v)"
     "))))-4*(18341*v^5+1344*v^3-2520*v-3360*sin(v)+210*sin(2*v)+2100*sin(3*v)-3150*sin(4*v)+2520*sin("
     "5*v)+2520*sin(6*v)-3150*sin(7*v)+2520*sin(8*v)+210*sin(9*v)-3150*sin(10*v)+420*sin(11*v)+210*sin"
     "(12*v)+420*sin(14*v))"},
    {"-1/6291456", -8, -11, -9,
     "6*(165878*v^5-9859*v^3-9930*v-630*sin(v)+2520*sin(2*v)+2310*sin(3*v)-5670*sin(4*v)+1680*sin(5*v)"
     "+1680*sin(6*v)-5880*sin(7*v)+2310*sin(8*v)+1680*sin(9*v)-840*sin(10*v)+2310*sin(11*v)-210*sin(12"
     "*v)-840*sin(13*v)-210*sin(15*v))+v*(6*(5893*v^4-52145*v^2+9930)*cos(v)+4*(99685*v^4+104103*v^2-1"
     "3590)*cos(2*v)+180*(-361*cos(3*v)+787*cos(4*v)-740*cos(5*v)+212*cos(6*v)+1104*cos(7*v)-377*cos(8"
     "*v)-40*cos(9*v)-66*cos(10*v)-395*cos(11*v)+65*cos(12*v)+78*cos(13*v)+12*cos(14*v)+23*cos(15*v))+"
     "v*(v*(2*(96427*v^2+513)*cos(3*v)+(203778-842996*v^2)*cos(4*v)-6*(-131620*cos(5*v)+116572*cos(6*v"
     ")+82296*cos(7*v)+145*cos(8*v)+16904*cos(9*v)-28534*cos(10*v)-23389*cos(11*v)+4087*cos(12*v)+2910"
     "*cos(13*v)+1236*cos(14*v)+925*cos(15*v))+v*(2*v*(44040192*v*(140*cos(v)^3+3*cos(5*v))*sin((v/2))"
     "^9*cos((v/2))^11-147678*cos(5*v)+123852*cos(6*v)+76254*cos(7*v)+47602*cos(8*v)+14264*cos(9*v)-35"
     "354*cos(10*v)-18078*cos(11*v)+3078*cos(12*v)+2109*cos(13*v)+1116*cos(14*v)+603*cos(15*v))-3*(227"
     "030*sin(v)-365012*sin(2*v)+74524*sin(3*v)-328361*sin(4*v)-248102*sin(5*v)+215592*sin(6*v)+107046"
     "*sin(7*v)+40423*sin(8*v)+25032*sin(9*v)-49128*sin(10*v)-29993*sin(11*v)+5145*sin(12*v)+3537*sin("
     "13*v)+1748*sin(14*v)+1072*sin(15*v))))-240*(-2688*cos(v)+6303*cos(2*v)-8687*cos(3*v)+1939*cos(4*"
     "v)-6433*cos(5*v)-5887*cos(6*v)+371*cos(7*v)-1323*cos(8*v)+1397*cos(9*v)+1271*cos(10*v)+200*cos(1"
     "1*v)+207*cos(12*v)+2440)*sin(v)^3))"},
    {"1/31457280", -8, -11, -9,
     "v*(4*(2852497*v^4+170640*v^2-207720)*cos(v)+(2064158*v^4-2922480*v^2+223920)*cos(2*v)+720*(586*c"
     "os(3*v)-1710*cos(4*v)+1310*cos(5*v)+560*cos(6*v)-408*cos(7*v)+1504*cos(8*v)-484*cos(9*v)-912*cos"
     "(10*v)+70*cos(11*v)-178*cos(12*v)+74*cos(13*v)+121*cos(14*v)+6*cos(15*v)+11*cos(16*v))+v*(v*(8*("
     "485010-519679*v^2)*cos(3*v)+240*(20686*cos(4*v)-12039*cos(5*v)+4270*cos(6*v)-14162*cos(7*v)-1460"
     "6*cos(8*v)+6470*cos(9*v)+4182*cos(10*v)+1427*cos(11*v)-7*(-178*cos(12*v)+93*cos(13*v)+69*cos(14*"
     "v)+8*cos(15*v))-41*cos(16*v))+v*(2*v*(110100480*v*(210*cos(2*v)+42*cos(4*v)+2*cos(6*v)+175)*sin("
     "(v/2))^9*cos((v/2))^11-585830*cos(4*v)-1144400*cos(5*v)-249340*cos(6*v)+1098208*cos(7*v)+519396*"
     "cos(8*v)-196056*cos(9*v)-133908*cos(10*v)-82040*cos(11*v)-35842*cos(12*v)+22516*cos(13*v)+12929*"
     "cos(14*v)+1894*cos(15*v)+1019*cos(16*v))+3*(1368670*sin(v)-1910495*sin(2*v)+3490840*sin(3*v)+131"
     "7326*sin(4*v)+149620*sin(5*v)+522816*sin(6*v)-1381824*sin(7*v)-805504*sin(8*v)+337776*sin(9*v)+2"
     "12736*sin(10*v)+109796*sin(11*v)+61986*sin(12*v)-35824*sin(13*v)-22679*sin(14*v)-3050*sin(15*v)-"
     "1849*sin(16*v))))-2400*(4366*cos(v)-4746*cos(2*v)+4156*cos(3*v)-6806*cos(4*v)-2270*cos(5*v)-2207"
     "*cos(6*v)-3446*cos(7*v)+1146*cos(8*v)+572*cos(9*v)+557*cos(10*v)+544*cos(11*v)+38*cos(12*v)+38*c"
     "os(13*v)-654)*sin(v)^3))-2*(227863*v^5+369240*v^3-105480*v-75600*sin(v)-6300*sin(2*v)+56700*sin("
     "3*v)-80640*sin(4*v)+69300*sin(5*v)+70560*sin(6*v)-80640*sin(7*v)+70560*sin(8*v)-5040*sin(9*v)-80"
     "640*sin(10*v)+13860*sin(11*v)-5040*sin(12*v)+1260*sin(13*v)+13860*sin(14*v)+1260*sin(16*v))"},
    {"-1/31457280", -8, -11, -9,
     "v*((468896*v^4-2845950*v^2+504540)*cos(v)+(3794666*v^4+3508410*v^2-424260)*cos(2*v)+180*(-3359*c"
     "os(3*v)+6514*cos(4*v)-5660*cos(5*v)+1975*cos(6*v)+8736*cos(7*v)-3088*cos(8*v)+88*cos(9*v)-711*co"
     "s(10*v)-3340*cos(11*v)+526*cos(12*v)+487*cos(13*v)+133*cos(14*v)+238*cos(15*v)+4*cos(16*v)+7*cos"
     "(17*v))+v*(v*(6*(218182*v^2+75025)*cos(3*v)-30*(-48938*cos(4*v)-205188*cos(5*v)+189209*cos(6*v)+"
     "123872*cos(7*v)+9360*cos(8*v)+34024*cos(9*v)-47753*cos(10*v)-37460*cos(11*v)+4522*cos(12*v)+2997"
     "*cos(13*v)+2499*cos(14*v)+1846*cos(15*v)+68*cos(16*v)+49*cos(17*v))+v*(2*v*(31457280*v*(49*(25*c"
     "os(v)+9*cos(3*v)+cos(5*v))+cos(7*v))*sin((v/2))^9*cos((v/2))^11-3244536*cos(4*v)-1062160*cos(5*v"
     ")+806275*cos(6*v)+541016*cos(7*v)+436792*cos(8*v)+145188*cos(9*v)-269891*cos(10*v)-141460*cos(11"
     "*v)+11496*cos(12*v)+10442*cos(13*v)+10763*cos(14*v)+5913*cos(15*v)+274*cos(16*v)+147*cos(17*v))-"
     "5461475*sin(v)+9728100*sin(2*v)-1651927*sin(3*v)+8272210*sin(4*v)+5719296*sin(5*v)-4891402*sin(6"
     "*v)-2271864*sin(7*v)-1253544*sin(8*v)-729384*sin(9*v)+1169646*sin(10*v)+708816*sin(11*v)-69694*s"
     "in(12*v)-53079*sin(13*v)-51572*sin(14*v)-31759*sin(15*v)-1350*sin(16*v)-812*sin(17*v)))-400*(-17"
     "068*cos(v)+33671*cos(2*v)-46168*cos(3*v)+9411*cos(4*v)-34507*cos(5*v)-29117*cos(6*v)+423*cos(7*v"
     ")-7921*cos(8*v)+7213*cos(9*v)+6135*cos(10*v)+1367*cos(11*v)+1363*cos(12*v)+36*cos(13*v)+35*cos(1"
     "4*v)+14143)*sin(v)^3))-4*(-2116147*v^5+59850*v^3+134820*v+5775*sin(v)-26775*sin(2*v)-30345*sin(3"
     "*v)+67200*sin(4*v)-17640*sin(5*v)-17745*sin(6*v)+70560*sin(7*v)-30240*sin(8*v)-17640*sin(9*v)+91"
     "35*sin(10*v)-30240*sin(11*v)+3360*sin(12*v)+9135*sin(13*v)+105*sin(14*v)+3360*sin(15*v)+105*sin("
     "17*v))"},
  },
};

const int cancellation_order_reduced[7] = {14, 15, 16, 17, 18, 19, 17};

const series_term series_table[] = {
  {0, 1, 0, "433489274083/237758976000"},
  {0, 1, 2, "-152802083671/2853107712000"},
  {0, 1, 4, "1000430523577/291016986624000"},
  {0, 1, 6, "-69882256253489/1548210368839680000"},
  {0, 1, 8, "257597135900761/1532728265151283200000"},
  {0, 1, 10, "-91527043218239/3384264009454033305600"},
  {0, 2, 0, "-28417333297/4953312000"},
  {0, 2, 2, "152802083671/237758976000"},
  {0, 2, 4, "-1000430523577/24251415552000"},
  {0, 2, 6, "69882256253489/129017530736640000"},
  {0, 2, 8, "-257597135900761/127727355429273600000"},
  {0, 2, 10, "91527043218239/282022000787836108800"},
  {0, 3, 0, "930518896733/39626496000"},
  {0, 3, 2, "-1680822920381/475517952000"},
  {0, 3, 4, "11004735759347/48502831104000"},
  {0, 3, 6, "-768704818788379/258035061473280000"},
  {0, 3, 8, "257597135900761/23223155532595200000"},
  {0, 3, 10, "-91527043218239/51276727415970201600"},
  {0, 4, 0, "-176930551859/2971987200"},
  {0, 4, 2, "1680822920381/142655385600"},
  {0, 4, 4, "-11004735759347/14550849331200"},
  {0, 4, 6, "768704818788379/77410518441984000"},
  {0, 4, 8, "-257597135900761/6966946659778560000"},
  {0, 4, 10, "91527043218239/15383018224791060480"},
  {0, 5, 0, "7854755921/65228800"},
  {0, 5, 2, "-1680822920381/63402393600"},
  {0, 5, 4, "11004735759347/6467044147200"},
  {0, 5, 6, "-768704818788379/34404674863104000"},
  {0, 5, 8, "257597135900761/3096420737679360000"},
  {0, 5, 10, "-91527043218239/6836896988796026880"},
  {0, 6, 0, "-146031020287/825552000"},
  {0, 6, 2, "1680822920381/39626496000"},
  {0, 6, 4, "-11004735759347/4041902592000"},
  {0, 6, 6, "768704818788379/21502921789440000"},
  {0, 6, 8, "-257597135900761/1935262961049600000"},
  {0, 6, 10, "91527043218239/4273060617997516800"},
  {0, 7, 0, "577045151693/2830464000"},
  {0, 7, 2, "-1680822920381/33965568000"},
  {0, 7, 4, "11004735759347/3464487936000"},
  {0, 7, 6, "-768704818788379/18431075819520000"},
  {0, 7, 8, "257597135900761/1658796823756800000"},
  {0, 7, 10, "-91527043218239/3662623386855014400"},
  {1, 1, 0, "433489274083/237758976000"},
  {1, 1, 2, "-152802083671/1426553856000"},
  {1, 1, 4, "680989543811/116406794649600"},
  {1, 1, 6, "-125177474703917/2322315553259520000"},
  {1, 1, 8, "517885739552761/306545653030256640000"},
  {1, 1, 10, "-2572884198423151/211516500590877081600000"},
  {1, 2, 0, "-28417333297/4953312000"},
  {1, 2, 2, "152802083671/118879488000"},
  {1, 2, 4, "-1000430523577/8083805184000"},
  {1, 2, 6, "161750007895703/21502921789440000"},
  {1, 2, 8, "-2419392089643157/6386367771463680000"},
  {1, 2, 10, "69067938626578009/5875458349746585600000"},
  {1, 3, 0, "930518896733/39626496000"},
  {1, 3, 2, "-1680822920381/237758976000"},
  {1, 3, 4, "851496508169/923863449600"},
  {1, 3, 6, "-3109822683210143/43005843578880000"},
  {1, 3, 8, "17171854137770701/4644631106519040000"},
  {1, 3, 10, "-1373640119936290727/11750916699493171200000"},
  {1, 4, 0, "-176930551859/2971987200"},
  {1, 4, 2, "1680822920381/71327692800"},
  {1, 4, 4, "-7685041522471/2078692761600"},
  {1, 4, 6, "37302412323393157/116115777662976000"},
  {1, 4, 8, "-1150037153857349/69669466597785600"},
  {1, 4, 10, "5553336881578048313/10575825029543854080000"},
  {1, 5, 0, "7854755921/65228800"},
  {1, 5, 2, "-1680822920381/31701196800"},
  {1, 5, 4, "4465879941727/479040307200"},
  {1, 5, 6, "-14651758435060069/17202337431552000"},
  {1, 5, 8, "5432847035340293/123856829507174400"},
  {1, 5, 10, "-2192163846661534231/1566788893265756160000"},
  {1, 6, 0, "-146031020287/825552000"},
  {1, 6, 2, "1680822920381/19813248000"},
  {1, 6, 4, "-855811097959/53892034560"},
  {1, 6, 6, "15982331031417479/10751460894720000"},
  {1, 6, 8, "-436210741712267/5691949885440000"},
  {1, 6, 10, "798931592780948369/326414352763699200000"},
  {1, 7, 0, "577045151693/2830464000"},
  {1, 7, 2, "-1680822920381/16982784000"},
  {1, 7, 4, "130969300116257/6928975872000"},
  {1, 7, 6, "-49277565690609847/27646613729280000"},
  {1, 7, 8, "335110207212583/3645707304960000"},
  {1, 7, 10, "-7395015266709846197/2518053578462822400000"},
  {2, 1, 0, "433489274083/237758976000"},
  {2, 1, 2, "-152802083671/951035904000"},
  {2, 1, 4, "1404086671901/194011324416000"},
  {2, 1, 6, "-108627551857199/1161157776629760000"},
  {2, 1, 8, "3113473234169/1621934672117760000"},
  {2, 1, 10, "-21678565330566029/282022000787836108800000"},
  {2, 2, 0, "-28417333297/4953312000"},
  {2, 2, 2, "152802083671/79252992000"},
  {2, 2, 4, "-1000430523577/4041902592000"},
  {2, 2, 6, "3812117933243383/193526296104960000"},
  {2, 2, 8, "-131666706221101/133049328572160000"},
  {2, 2, 10, "766613393985947587/23501833398986342400000"},
  {2, 3, 0, "930518896733/39626496000"},
  {2, 3, 2, "-1680822920381/158505984000"},
  {2, 3, 4, "67397661839051/32335220736000"},
  {2, 3, 6, "-47508096701122969/193526296104960000"},
  {2, 3, 8, "31127602487128507/1548210368839680000"},
  {2, 3, 10, "-59333732949165745199/47003666797972684800000"},
  {2, 4, 0, "-176930551859/2971987200"},
  {2, 4, 2, "1680822920381/47551795200"},
  {2, 4, 4, "-855811097959/97005662208"},
  {2, 4, 6, "149201016148079837/116115777662976000"},
  {2, 4, 8, "-407769624909121/3225438268416000"},
  {2, 4, 10, "6653867251060213627/742163159967989760000"},
  {2, 5, 0, "7854755921/65228800"},
  {2, 5, 2, "-1680822920381/21134131200"},
  {2, 5, 4, "19713857381587/862272552960"},
  {2, 5, 6, "-10823009510563069/2867056238592000"},
  {2, 5, 8, "83749133157903719/206428049178624000"},
  {2, 5, 10, "-189076914789983483663/6267155573063024640000"},
  {2, 6, 0, "-146031020287/825552000"},
  {2, 6, 2, "1680822920381/13208832000"},
  {2, 6, 4, "-26590548293789/673650432000"},
  {2, 6, 6, "224945948304809533/32254382684160000"},
  {2, 6, 8, "-12256588145611/15672683520000"},
  {2, 6, 10, "232561853289543390209/3916972233164390400000"},
  {2, 7, 0, "577045151693/2830464000"},
  {2, 7, 2, "-1680822920381/11321856000"},
  {2, 7, 4, "108959828597563/2309658624000"},
  {2, 7, 6, "-117725260678970569/13823306864640000"},
  {2, 7, 8, "35655584375317913/36862151639040000"},
  {2, 7, 10, "-248038978837339401007/3357404771283763200000"},
  {3, 1, 0, "433489274083/237758976000"},
  {3, 1, 2, "-152802083671/713276928000"},
  {3, 1, 4, "2211398968549/291016986624000"},
  {3, 1, 6, "-33578069009689/145144722078720000"},
  {3, 1, 8, "-144902264134913/17516894458871808000"},
  {3, 1, 10, "-18020995400748499/14101100039391805440000"},
  {3, 2, 0, "-28417333297/4953312000"},
  {3, 2, 2, "152802083671/59439744000"},
  {3, 2, 4, "-1000430523577/2425141555200"},
  {3, 2, 6, "66666008116601/1860829770240000"},
  {3, 2, 8, "-11606680689206023/6386367771463680000"},
  {3, 2, 10, "363627917613911087/5875458349746585600000"},
  {3, 3, 0, "930518896733/39626496000"},
  {3, 3, 2, "-1680822920381/118879488000"},
  {3, 3, 4, "180183513998459/48502831104000"},
  {3, 3, 6, "-6773330550886447/12095393506560000"},
  {3, 3, 8, "8117004168919561/142911726354432000"},
  {3, 3, 10, "-9618739589821913801/2350183339898634240000"},
  {3, 4, 0, "-176930551859/2971987200"},
  {3, 4, 2, "1680822920381/35663846400"},
  {3, 4, 4, "-117366928934503/7275424665600"},
  {3, 4, 6, "9440045489117267/2902894441574400"},
  {3, 4, 8, "-154456853448146527/348347332988928000"},
  {3, 4, 10, "156768697509684951877/3525275009847951360000"},
  {3, 5, 0, "7854755921/65228800"},
  {3, 5, 2, "-1680822920381/15850598400"},
  {3, 5, 4, "21053722246547/497464934400"},
  {3, 5, 6, "-86689543640365/8601168715776"},
  {3, 5, 8, "153981351646932977/95274484236288000"},
  {3, 5, 10, "-98146042038903700999/522262964421918720000"},
  {3, 6, 0, "-146031020287/825552000"},
  {3, 6, 2, "1680822920381/9906624000"},
  {3, 6, 4, "-148538554003387/2020951296000"},
  {3, 6, 6, "77089257945806723/4031797835520000"},
  {3, 6, 8, "-9226172386459001/2764661372928000"},
  {3, 6, 10, "16273137531259548461/39169722331643904000"},
  {3, 7, 0, "577045151693/2830464000"},
  {3, 7, 2, "-1680822920381/8491392000"},
  {3, 7, 4, "60974002854799/692897587200"},
  {3, 7, 6, "-20335903756276117/863956679040000"},
  {3, 7, 8, "2799280124854146809/663518729502720000"},
  {3, 7, 10, "-449833739846395057357/839351192820940800000"},
  {4, 1, 0, "433489274083/237758976000"},
  {4, 1, 2, "-152802083671/570621542400"},
  {4, 1, 4, "7762618237/1119296102400"},
  {4, 1, 6, "-7881601960439/14744860655616000"},
  {4, 1, 8, "-27284304529514897/613091306060513280000"},
  {4, 1, 10, "-1799866965050155021/282022000787836108800000"},
  {4, 2, 0, "-28417333297/4953312000"},
  {4, 2, 2, "152802083671/47551795200"},
  {4, 2, 4, "-1000430523577/1616761036800"},
  {4, 2, 6, "604487352966331/11058645491712000"},
  {4, 2, 8, "-75851624289432059/25545471085854720000"},
  {4, 2, 10, "646544241473169703/7833944466328780800000"},
  {4, 3, 0, "930518896733/39626496000"},
  {4, 3, 2, "-1680822920381/95103590400"},
  {4, 3, 4, "2349705253321/404190259200"},
  {4, 3, 6, "-23296554826706981/22117290983424000"},
  {4, 3, 8, "58594320744987337/488908537528320000"},
  {4, 3, 10, "-144079291878124208197/15667888932657561600000"},
  {4, 4, 0, "-176930551859/2971987200"},
  {4, 4, 2, "1680822920381/28531077120"},
  {4, 4, 4, "-74576374036553/2910169866240"},
  {4, 4, 6, "95021198062331/14455745740800"},
  {4, 4, 8, "-1557322122991096859/1393389331955712000"},
  {4, 4, 10, "1918393406379510690887/14101100039391805440000"},
  {4, 5, 0, "7854755921/65228800"},
  {4, 5, 2, "-1680822920381/12680478720"},
  {4, 5, 4, "7297045929049/107784069120"},
  {4, 5, 6, "-20692039318485463/982990710374400"},
  {4, 5, 8, "5526609376838648143/1238568295071744000"},
  {4, 5, 10, "-4320389579215898805647/6267155573063024640000"},
  {4, 6, 0, "-146031020287/825552000"},
  {4, 6, 2, "1680822920381/7925299200"},
  {4, 6, 4, "-1177252560689/9980006400"},
  {4, 6, 6, "74732313119187721/1843107581952000"},
  {4, 6, 8, "-3727799369309648939/387052592209920000"},
  {4, 6, 10, "6574125730067577575911/3916972233164390400000"},
  {4, 7, 0, "577045151693/2830464000"},
  {4, 7, 2, "-1680822920381/6793113600"},
  {4, 7, 4, "12244386604777/86612198400"},
  {4, 7, 6, "-26404757298856247/526602166272000"},
  {4, 7, 8, "8187780819568609243/663518729502720000"},
  {4, 7, 10, "-7493224716658621457999/3357404771283763200000"},
  {5, 1, 0, "433489274083/237758976000"},
  {5, 1, 2, "-152802083671/475517952000"},
  {5, 1, 4, "1017850218043/194011324416000"},
  {5, 1, 6, "-355108221471443/331759364751360000"},
  {5, 1, 8, "-131687699860605701/1021818843434188800000"},
  {5, 1, 10, "-970130052388059581/47003666797972684800000"},
  {5, 2, 0, "-28417333297/4953312000"},
  {5, 2, 2, "152802083671/39626496000"},
  {5, 2, 4, "-1000430523577/1154829312000"},
  {5, 2, 6, "2072463900685193/27646613729280000"},
  {5, 2, 8, "-4147730814505219/886995523814400000"},
  {5, 2, 10, "25097056509899527/559567461880627200000"},
  {5, 3, 0, "930518896733/39626496000"},
  {5, 3, 2, "-1680822920381/79252992000"},
  {5, 3, 4, "270959894639173/32335220736000"},
  {5, 3, 6, "-97479391651340473/55293227458560000"},
  {5, 3, 8, "1103582448711358933/5160701229465600000"},
  {5, 3, 10, "-135427504564083230351/7833944466328780800000"},
  {5, 4, 0, "-176930551859/2971987200"},
  {5, 4, 2, "1680822920381/23775897600"},
  {5, 4, 4, "-180938567211709/4850283110400"},
  {5, 4, 6, "192417404089068163/16587968237568000"},
  {5, 4, 8, "-13040661300795157/5582489310720000"},
  {5, 4, 10, "753690800700831259867/2350183339898634240000"},
  {5, 5, 0, "7854755921/65228800"},
  {5, 5, 2, "-1680822920381/10567065600"},
  {5, 5, 4, "60974002854799/615908966400"},
  {5, 5, 6, "-31108033258478857/819158925312000"},
  {5, 5, 8, "20614799744422537499/2064280491786240000"},
  {5, 5, 10, "-283489566000723918761/149217989834833920000"},
  {5, 6, 0, "-146031020287/825552000"},
  {5, 6, 2, "1680822920381/6604416000"},
  {5, 6, 4, "-232891275659849/1347300864000"},
  {5, 6, 6, "340402048152771923/4607768954880000"},
  {5, 6, 8, "-1791871329414738589/80635956710400000"},
  {5, 6, 10, "3257163476890690029371/652828705527398400000"},
  {5, 7, 0, "577045151693/2830464000"},
  {5, 7, 2, "-1680822920381/5660928000"},
  {5, 7, 4, "478770728431733/2309658624000"},
  {5, 7, 6, "-361861433042278873/3949516247040000"},
  {5, 7, 8, "31765434645249520399/1105864549171200000"},
  {5, 7, 10, "-3797117763219719452879/559567461880627200000"},
  {6, 1, 0, "433489274083/237758976000"},
  {6, 1, 2, "-152802083671/407586816000"},
  {6, 1, 4, "42107584279/16629542092800"},
  {6, 1, 6, "-48644589686717/25519951134720000"},
  {6, 1, 8, "-8465930460350551/29194824098119680000"},
  {6, 1, 10, "-1588162811844063649/30216642941553868800000"},
  {6, 2, 0, "-28417333297/4953312000"},
  {6, 2, 2, "152802083671/33965568000"},
  {6, 2, 4, "-1000430523577/866121984000"},
  {6, 2, 6, "1319911328641663/13823306864640000"},
  {6, 2, 8, "-633679429758461/86889357434880000"},
  {6, 2, 10, "-13749338388459469/91565584671375360000"},
  {6, 3, 0, "930518896733/39626496000"},
  {6, 3, 2, "-1680822920381/67931136000"},
  {6, 3, 4, "2433446807381/213199257600"},
  {6, 3, 6, "-150750689506359931/55293227458560000"},
  {6, 3, 8, "151232830491144629/442345819668480000"},
  {6, 3, 10, "-11391719790424784543/387392858225049600000"},
  {6, 4, 0, "-176930551859/2971987200"},
  {6, 4, 2, "1680822920381/20379340800"},
  {6, 4, 4, "-26590548293789/519673190400"},
  {6, 4, 6, "154953352570753493/8293984118784000"},
  {6, 4, 8, "-143381346778111763/33175936475136000"},
  {6, 4, 10, "1938525891219194555527/3021664294155386880000"},
  {6, 5, 0, "7854755921/65228800"},
  {6, 5, 2, "-1680822920381/9057484800"},
  {6, 5, 4, "251688917686417/1847726899200"},
  {6, 5, 6, "-8983100481771361/144557457408000"},
  {6, 5, 8, "289598383359113/14860025856000"},
  {6, 5, 10, "-2936244786853000878251/671480954256752640000"},
  {6, 6, 0, "-146031020287/825552000"},
  {6, 6, 2, "1680822920381/5660928000"},
  {6, 6, 4, "-3438345456101/14435366400"},
  {6, 6, 6, "280448198337422053/2303884477440000"},
  {6, 6, 8, "-408566151907529191/9215537909760000"},
  {6, 6, 10, "10234561211810943225223/839351192820940800000"},
  {6, 7, 0, "577045151693/2830464000"},
  {6, 7, 2, "-1680822920381/4852224000"},
  {6, 7, 4, "282860542755301/989853696000"},
  {6, 7, 6, "-45957876214170247/303808942080000"},
  {6, 7, 8, "1822061164406572133/31596129976320000"},
  {6, 7, 10, "-1213351274004131872663/71944387956080640000"},
};
const int series_table_size = 294;
// clang-format on

}  // namespace oscint::detail
