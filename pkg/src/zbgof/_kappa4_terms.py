"""Exact rational coefficients of the half-integer-power polynomials in kappa_4(a).

Each entry maps ``p`` to ``(numerator, denominator)`` of the coefficient of
``a**(p/2)``.  The polynomials enter :func:`zbgof.null_theory._kappa4` as
P1..P6; see that function for how they are combined.
"""

P1 = {
    9: (2418660, 15888388972237),
    11: (108093420, 15888388972237),
    13: (2332420110, 15888388972237),
    15: (32404982280, 15888388972237),
    17: (1304640003889, 63553555888948),
    19: (10148404334297, 63553555888948),
    21: (1, 1),
    23: (82389179722704, 15888388972237),
    25: (1444270220426605, 63553555888948),
    27: (5432365877003493, 63553555888948),
    29: (8873302935379397, 31776777944474),
    31: (25411446550103755, 31776777944474),
    33: (32130704968678825, 15888388972237),
    35: (72157365052385701, 15888388972237),
    37: (144535729392983458, 15888388972237),
    39: (259076456429254198, 15888388972237),
    41: (416552354601936792, 15888388972237),
    43: (601727316318085656, 15888388972237),
    45: (781693114431576816, 15888388972237),
    47: (913594901408998032, 15888388972237),
    49: (960527932076785920, 15888388972237),
    51: (21115219451189760, 369497417959),
    53: (770871902940374400, 15888388972237),
    55: (586996844600676480, 15888388972237),
    57: (400118395950180864, 15888388972237),
    59: (243542217879163392, 15888388972237),
    61: (131966188294238208, 15888388972237),
    63: (63417825270829056, 15888388972237),
    65: (26902928333987840, 15888388972237),
    67: (10016986656268288, 15888388972237),
    69: (3250400705183744, 15888388972237),
    71: (911030547578880, 15888388972237),
    73: (218077726638080, 15888388972237),
    75: (43933586817024, 15888388972237),
    77: (7304351055872, 15888388972237),
    79: (975356035072, 15888388972237),
    81: (100514398208, 15888388972237),
    83: (7501512704, 15888388972237),
    85: (8388608, 369497417959),
    87: (8388608, 15888388972237),
}

P2 = {
    9: (644976, 4913464014883),
    11: (29469888, 4913464014883),
    13: (650803608, 4913464014883),
    15: (9263307304, 4913464014883),
    17: (1434259933009, 73701960223245),
    19: (3817681446062, 24567320074415),
    21: (1, 1),
    23: (393110274779764, 73701960223245),
    25: (1773826939317421, 73701960223245),
    27: (6876636097430098, 73701960223245),
    29: (23178971747762287, 73701960223245),
    31: (22856499656988768, 24567320074415),
    33: (11956380864994854, 4913464014883),
    35: (417152280084258104, 73701960223245),
    37: (866772377781476636, 73701960223245),
    39: (1614448743288950624, 73701960223245),
    41: (540503048824952792, 14740392044649),
    43: (1357706227893363264, 24567320074415),
    45: (1844560574332883296, 24567320074415),
    47: (2260384021120766464, 24567320074415),
    49: (2498830444647711936, 24567320074415),
    51: (498261964927452160, 4913464014883),
    53: (447687023824409088, 4913464014883),
    55: (362098332677613568, 4913464014883),
    57: (1316153654067809792, 24567320074415),
    59: (858214151772459008, 24567320074415),
    61: (100135574979573760, 4913464014883),
    63: (260512018086756352, 24567320074415),
    65: (361283014419267584, 73701960223245),
    67: (49226553320341504, 24567320074415),
    69: (17689849815269376, 24567320074415),
    71: (16645725011050496, 73701960223245),
    73: (903286619373568, 14740392044649),
    75: (1048045253820416, 73701960223245),
    77: (204951751491584, 73701960223245),
    79: (11039609454592, 24567320074415),
    81: (286898782208, 4913464014883),
    83: (432063643648, 73701960223245),
    85: (31448891392, 73701960223245),
    87: (1476395008, 73701960223245),
    89: (33554432, 73701960223245),
}

P3 = {
    9: (32400, 1935863857033),
    11: (2160000, 1935863857033),
    13: (68682600, 1935863857033),
    15: (1388405400, 1935863857033),
    17: (20067723385, 1935863857033),
    19: (221172245710, 1935863857033),
    21: (1, 1),
    23: (13839308388342, 1935863857033),
    25: (824829361875297, 19358638570330),
    27: (2081596612710102, 9679319285165),
    29: (225198237739750229, 241982982129125),
    31: (168771272531369632, 48396596425825),
    33: (552080771887033714, 48396596425825),
    35: (7935831986201000696, 241982982129125),
    37: (4032572610721320364, 48396596425825),
    39: (9097014341614307008, 48396596425825),
    41: (91456134448134851632, 241982982129125),
    43: (32883798565740245888, 48396596425825),
    45: (264962795071741033024, 241982982129125),
    47: (383500451258021994496, 241982982129125),
    49: (499256744973609739264, 241982982129125),
    51: (585163120864498180096, 241982982129125),
    53: (617790924040639606784, 241982982129125),
    55: (23501677425911791616, 9679319285165),
    57: (503148655054716305408, 241982982129125),
    59: (77530781171012009984, 48396596425825),
    61: (268353384686546747392, 241982982129125),
    63: (166605364226116550656, 241982982129125),
    65: (740354924891209728, 1935863857033),
    67: (9170715202355724288, 48396596425825),
    69: (20189169394128519168, 241982982129125),
    71: (7862451184013934592, 241982982129125),
    73: (2692695772327051264, 241982982129125),
    75: (805192554923425792, 241982982129125),
    77: (208355953949540352, 241982982129125),
    79: (46128149280325632, 241982982129125),
    81: (8609490215632896, 241982982129125),
    83: (1328326413123584, 241982982129125),
    85: (32972128387072, 48396596425825),
    87: (15815143325696, 241982982129125),
    89: (1100316934144, 241982982129125),
    91: (49392123904, 241982982129125),
    93: (1073741824, 241982982129125),
}

P4 = {
    9: (-18720, 617775097639),
    11: (-174720, 88253585377),
    13: (-38138960, 617775097639),
    15: (-756947760, 617775097639),
    17: (-10758989058, 617775097639),
    19: (-116854259524, 617775097639),
    21: (-5052981011802, 3088875488195),
    23: (-35806380491592, 3088875488195),
    25: (-1061623519833274, 15444377440975),
    27: (-5353814148669156, 15444377440975),
    29: (-581443725209867406, 386109436024375),
    31: (-2198447109494797632, 386109436024375),
    33: (-7296425515279897524, 386109436024375),
    35: (-21405868799083127328, 386109436024375),
    37: (-55835065962877271824, 386109436024375),
    39: (-130113321129467042688, 386109436024375),
    41: (-271954859321968227744, 386109436024375),
    43: (-511484786629896684992, 386109436024375),
    45: (-867861901016544200352, 386109436024375),
    47: (-1331143346975602002432, 386109436024375),
    49: (-1848456566020192628672, 386109436024375),
    51: (-2326262930245559023104, 386109436024375),
    53: (-2654886604198704375552, 386109436024375),
    55: (-392622223567954968576, 55158490860625),
    57: (-2580351736494166597632, 386109436024375),
    59: (-2196055362565462155264, 386109436024375),
    61: (-1692713927754382053376, 386109436024375),
    63: (-1180180835631042134016, 386109436024375),
    65: (-21229402741482749952, 11031698172125),
    67: (-84304887466191880192, 77221887204875),
    69: (-214901751061628780544, 386109436024375),
    71: (-19627491529479684096, 77221887204875),
    73: (-1599308948797128704, 15444377440975),
    75: (-2892470402622160896, 77221887204875),
    77: (-4616904135234551808, 386109436024375),
    79: (-7378867027181568, 2206339634425),
    81: (-313552794399277056, 386109436024375),
    83: (-65342235671003136, 386109436024375),
    85: (-460544930742272, 15444377440975),
    87: (-1681779270352896, 386109436024375),
    89: (-39628321062912, 77221887204875),
    91: (-3617973075968, 77221887204875),
    93: (-171530256384, 55158490860625),
    95: (-51539607552, 386109436024375),
    97: (-1073741824, 386109436024375),
}

P5 = {
    9: (10800, 617775097639),
    11: (713520, 617775097639),
    13: (22493400, 617775097639),
    15: (64439680, 88253585377),
    17: (6473344595, 617775097639),
    19: (70913863773, 617775097639),
    21: (1, 1),
    23: (22013701833097, 3088875488195),
    25: (26208105471852, 617775097639),
    27: (3309922453293424, 15444377440975),
    29: (71847624095850058, 77221887204875),
    31: (1353904109355641646, 386109436024375),
    33: (7146557038684388, 617775097639),
    35: (12987588438897780244, 386109436024375),
    37: (33474782549507146248, 386109436024375),
    39: (76842283296113132568, 386109436024375),
    41: (157715599116006339888, 386109436024375),
    43: (290355193731959736432, 386109436024375),
    45: (480706690484033150464, 386109436024375),
    47: (143425519049003786752, 77221887204875),
    49: (193088395545537371904, 77221887204875),
    51: (1174120309805297830656, 386109436024375),
    53: (1290647472597674001408, 386109436024375),
    55: (256513948672423369728, 77221887204875),
    57: (1151926764144741052416, 386109436024375),
    59: (934445814340112560128, 386109436024375),
    61: (683913887836570927104, 386109436024375),
    63: (450927587008642531328, 386109436024375),
    65: (38185865328657891328, 55158490860625),
    67: (142095030781925720064, 386109436024375),
    69: (67525511518112448512, 386109436024375),
    71: (28574379833515835392, 386109436024375),
    73: (17145576324857856, 617775097639),
    75: (3540684493395329024, 386109436024375),
    77: (146183491321593856, 55158490860625),
    79: (256349979600224256, 386109436024375),
    81: (11006602781917184, 77221887204875),
    83: (9975401333915648, 386109436024375),
    85: (1496880726933504, 386109436024375),
    87: (180938852007936, 386109436024375),
    89: (3385507971072, 77221887204875),
    91: (164282499072, 55158490860625),
    93: (50465865728, 386109436024375),
    95: (1073741824, 386109436024375),
}

P6 = {
    9: (2494800, 94396675580161),
    11: (153522000, 94396675580161),
    13: (4508001000, 94396675580161),
    15: (84261705600, 94396675580161),
    17: (1128542725445, 94396675580161),
    19: (11559938854395, 94396675580161),
    21: (1, 1),
    23: (632454534820939, 94396675580161),
    25: (17755948088155402, 471983377900805),
    27: (84918717349357034, 471983377900805),
    29: (8759154059363803308, 11799584447520125),
    31: (6299684566265892228, 2359916889504025),
    33: (99549118197334017808, 11799584447520125),
    35: (55679266648601820368, 2359916889504025),
    37: (692768130919254100736, 11799584447520125),
    39: (308188896351346168064, 2359916889504025),
    41: (3075111890856037819648, 11799584447520125),
    43: (5521874557177178040576, 11799584447520125),
    45: (8942511036426673245184, 11799584447520125),
    47: (2616724871911485932544, 2359916889504025),
    49: (3462982744024769019904, 2359916889504025),
    51: (20742701122730313433088, 11799584447520125),
    53: (22501362691630829371392, 11799584447520125),
    55: (4420323669413709512704, 2359916889504025),
    57: (19647944888437401321472, 11799584447520125),
    59: (15795271654708880736256, 11799584447520125),
    61: (11468876539243907776512, 11799584447520125),
    63: (7508997058376752955392, 11799584447520125),
    65: (4423768165953499561984, 11799584447520125),
    67: (2338874529100001705984, 11799584447520125),
    69: (1106158108427488854016, 11799584447520125),
    71: (93225084226451275776, 2359916889504025),
    73: (174166628281696124928, 11799584447520125),
    75: (57363506280532017152, 11799584447520125),
    77: (3306593531203682304, 2359916889504025),
    79: (4132075315205767168, 11799584447520125),
    81: (177063682063204352, 2359916889504025),
    83: (160212574372102144, 11799584447520125),
    85: (24009421235421184, 11799584447520125),
    87: (2899236068786176, 11799584447520125),
    89: (54206782242816, 2359916889504025),
    91: (3680786972672, 2359916889504025),
    93: (807453851648, 11799584447520125),
    95: (17179869184, 11799584447520125),
}
