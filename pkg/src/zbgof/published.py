"""Published reference values for the Z_{n,a} test.

``TABLE1``: mean, variance, skewness and kurtosis of the limit null law.
``TABLE2``: null quantiles of Z_{n,a} (keys n = 20, 50, 100 are simulated;
``"inf"`` is the four-moment Pearson approximation of the limit law).
``TABLE3``: empirical rejection rates in percent at level 0.05; a perfect
100% is stored as 100.
"""
from .errors import InvalidInput

TABLE1_A = (0.1, 0.25, 0.5, 0.75, 1.0, 3.0, 5.0, 10.0)

TABLE1 = {
    0.1: (30.4036, 304.1938, 1.4542, 6.4513),
    0.25: (7.7811, 31.2928, 1.7549, 7.8821),
    0.5: (2.6013, 4.7153, 1.9576, 8.9907),
    0.75: (1.3056, 1.3821, 2.0799, 9.7885),
    1.0: (0.7787, 0.5430, 2.1780, 10.4822),
    3.0: (0.0861, 0.0094, 2.5812, 13.3852),
    5.0: (0.0277, 0.0011, 2.7053, 14.2265),
    10.0: (0.0055, 0.0001, 2.7885, 14.7597),
}

TABLE2_LEVELS = (0.01, 0.05, 0.1, 0.9, 0.95, 0.99)

TABLE2 = {
    20: {
        0.1: (6.86169, 10.51119, 13.04177, 53.02253, 62.95695, 84.99265),
        0.25: (1.04896, 1.85667, 2.48811, 15.17277, 18.74151, 26.51209),
        0.5: (0.21479, 0.42809, 0.61130, 5.43755, 6.81869, 9.96010),
        0.75: (0.07838, 0.16585, 0.24721, 2.75949, 3.53893, 5.41328),
        1.0: (0.03616, 0.08152, 0.12623, 1.63633, 2.14516, 3.40884),
        3.0: (0.00136, 0.00467, 0.00866, 0.17785, 0.25076, 0.44301),
        5.0: (0.00030, 0.00120, 0.00225, 0.05674, 0.08146, 0.14904),
        10.0: (0.00004, 0.00017, 0.00032, 0.01116, 0.01631, 0.03051),
    },
    50: {
        0.1: (6.44914, 9.96704, 12.49225, 53.05553, 63.40399, 86.79261),
        0.25: (0.99974, 1.79193, 2.40350, 15.05561, 18.79428, 26.90751),
        0.5: (0.20190, 0.42203, 0.60621, 5.40910, 6.89826, 10.24374),
        0.75: (0.07554, 0.16688, 0.25100, 2.79329, 3.59782, 5.50480),
        1.0: (0.03526, 0.08298, 0.12909, 1.69165, 2.20391, 3.46662),
        3.0: (0.00144, 0.00464, 0.00847, 0.19527, 0.27076, 0.46805),
        5.0: (0.00030, 0.00116, 0.00221, 0.06399, 0.09031, 0.16034),
        10.0: (0.00004, 0.00017, 0.00033, 0.01292, 0.01859, 0.03359),
    },
    100: {
        0.1: (6.35269, 9.91258, 12.40696, 53.26156, 63.85351, 87.88282),
        0.25: (0.99012, 1.75319, 2.36455, 15.13173, 18.81316, 27.23384),
        0.5: (0.20292, 0.41909, 0.60298, 5.43381, 6.88596, 10.38987),
        0.75: (0.07478, 0.16796, 0.25341, 2.80970, 3.63695, 5.56701),
        1.0: (0.03583, 0.08448, 0.13175, 1.70456, 2.23136, 3.47844),
        3.0: (0.00149, 0.00478, 0.00876, 0.20069, 0.27509, 0.45774),
        5.0: (0.00031, 0.00118, 0.00228, 0.06636, 0.09233, 0.15819),
        10.0: (0.00004, 0.00017, 0.00034, 0.01354, 0.01923, 0.03358),
    },
    'inf': {
        0.1: (6.89295, 9.89596, 12.27245, 53.39952, 63.92766, 87.89731),
        0.25: (1.29920, 1.83683, 2.35713, 15.10009, 18.73029, 27.15089),
        0.5: (0.32955, 0.45838, 0.60581, 5.41750, 6.89193, 10.35260),
        0.75: (0.13650, 0.19046, 0.25773, 2.81741, 3.63395, 5.57065),
        1.0: (0.07292, 0.10059, 0.13743, 1.71902, 2.23934, 3.48445),
        3.0: (0.00826, 0.00931, 0.01142, 0.20558, 0.27903, 0.45910),
        5.0: (0.00254, 0.00274, 0.00322, 0.06843, 0.09441, 0.15828),
        10.0: (0.00038, 0.00041, 0.00048, 0.01414, 0.01980, 0.03371),
    },
}

TABLE3_STATISTICS = (
    "Z(0.1)", "Z(0.25)", "Z(0.5)", "Z(0.75)", "Z(1)", "Z(3)", "Z(5)", "Z(10)",
    "HV(2.5)", "HV(5)", "HV(10)", "SW", "BCMR", "BHEP", "AD", "JB", "BE",
)

# (alternative, n) -> rates in the order of TABLE3_STATISTICS
TABLE3 = {
    ('N', 20): (5, 5, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 2, 5),
    ('N', 50): (5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 4, 5),
    ('N', 100): (5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 4, 5),
    ('NMix(0.3,1,0.25)', 20): (25, 28, 27, 24, 23, 18, 17, 17, 11, 13, 15, 29, 29, 29, 30, 7, 25),
    ('NMix(0.3,1,0.25)', 50): (61, 65, 62, 59, 57, 45, 41, 38, 15, 24, 31, 60, 60, 62, 68, 19, 56),
    ('NMix(0.3,1,0.25)', 100): (92, 93, 91, 89, 86, 76, 72, 68, 23, 45, 56, 88, 88, 90, 94, 50, 86),
    ('NMix(0.5,1,4)', 20): (35, 42, 42, 41, 40, 33, 32, 32, 32, 32, 31, 39, 41, 41, 46, 25, 34),
    ('NMix(0.5,1,4)', 50): (78, 85, 83, 80, 77, 59, 53, 48, 49, 50, 46, 77, 78, 79, 86, 59, 52),
    ('NMix(0.5,1,4)', 100): (98, 99, 99, 98, 97, 86, 77, 66, 68, 68, 63, 98, 98, 98, 99, 87, 75),
    ('t3', 20): (19, 27, 33, 35, 36, 36, 36, 36, 39, 38, 37, 35, 37, 34, 34, 32, 30),
    ('t3', 50): (37, 52, 61, 64, 65, 62, 61, 58, 66, 64, 60, 64, 66, 62, 61, 67, 41),
    ('t3', 100): (63, 79, 85, 87, 87, 84, 82, 78, 85, 84, 80, 87, 88, 86, 85, 89, 54),
    ('t5', 20): (8, 12, 16, 18, 19, 20, 20, 21, 22, 22, 22, 19, 20, 18, 17, 17, 16),
    ('t5', 50): (14, 22, 30, 34, 35, 36, 35, 34, 40, 39, 36, 36, 38, 31, 30, 39, 22),
    ('t5', 100): (23, 38, 48, 52, 54, 53, 50, 47, 59, 57, 51, 56, 58, 50, 48, 63, 27),
    ('t10', 20): (6, 6, 8, 9, 10, 11, 11, 11, 12, 12, 11, 10, 10, 9, 9, 8, 9),
    ('t10', 50): (6, 8, 11, 13, 14, 16, 16, 16, 20, 19, 18, 15, 17, 12, 11, 18, 11),
    ('t10', 100): (8, 12, 16, 19, 20, 23, 22, 21, 29, 27, 24, 24, 25, 18, 16, 29, 11),
    ('U', 20): (18, 21, 15, 8, 4, 1, 1, 1, 0, 0, 0, 20, 17, 13, 17, 0, 4),
    ('U', 50): (47, 59, 59, 50, 36, 2, 1, 0, 0, 0, 0, 75, 69, 54, 57, 0, 3),
    ('U', 100): (87, 94, 95, 94, 91, 8, 1, 0, 0, 0, 0, 100, 99, 94, 95, 57, 5),
    ('chi2_5', 20): (18, 28, 36, 40, 41, 40, 39, 40, 32, 35, 38, 43, 43, 42, 38, 24, 44),
    ('chi2_5', 50): (44, 66, 78, 82, 84, 85, 84, 83, 62, 74, 79, 89, 88, 83, 80, 68, 84),
    ('chi2_5', 100): (80, 95, 98, 99, 99, 99, 99, 99, 89, 97, 98, 100, 100, 99, 99, 97, 99),
    ('chi2_15', 20): (7, 11, 15, 16, 17, 18, 18, 18, 16, 17, 18, 18, 18, 17, 15, 11, 18),
    ('chi2_15', 50): (13, 23, 33, 39, 42, 45, 45, 45, 31, 37, 42, 43, 43, 40, 35, 31, 44),
    ('chi2_15', 100): (21, 42, 59, 67, 71, 76, 77, 76, 50, 65, 72, 74, 74, 68, 61, 60, 74),
    ('B(1,4)', 20): (32, 41, 47, 48, 48, 43, 41, 41, 27, 34, 38, 59, 58, 52, 51, 20, 49),
    ('B(1,4)', 50): (78, 88, 92, 93, 94, 91, 89, 87, 51, 73, 81, 99, 98, 94, 95, 67, 90),
    ('B(1,4)', 100): (99, 100, 100, 100, 100, 100, 100, 100, 84, 98, 99, 100, 100, 100, 100, 99, 100),
    ('B(2,5)', 20): (9, 12, 14, 15, 14, 13, 13, 13, 9, 11, 12, 17, 17, 17, 15, 5, 15),
    ('B(2,5)', 50): (18, 31, 39, 42, 43, 39, 37, 36, 14, 22, 29, 50, 48, 44, 39, 15, 40),
    ('B(2,5)', 100): (38, 63, 75, 79, 81, 79, 76, 73, 23, 51, 64, 90, 89, 80, 76, 51, 73),
    ('Gamma(1,5)', 20): (55, 66, 73, 74, 75, 71, 70, 69, 54, 62, 66, 83, 82, 77, 77, 47, 76),
    ('Gamma(1,5)', 50): (96, 99, 99, 99, 100, 99, 99, 99, 90, 96, 98, 100, 100, 100, 100, 96, 99),
    ('Gamma(1,5)', 100): (100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100),
    ('Gamma(5,1)', 20): (9, 14, 19, 22, 23, 23, 24, 24, 20, 22, 23, 23, 24, 23, 20, 14, 25),
    ('Gamma(5,1)', 50): (18, 34, 47, 53, 56, 59, 59, 59, 40, 49, 54, 59, 58, 54, 48, 42, 58),
    ('Gamma(5,1)', 100): (35, 63, 79, 84, 87, 90, 90, 89, 65, 81, 86, 90, 90, 85, 81, 78, 88),
    ('W(1,0.5)', 20): (56, 68, 74, 75, 76, 72, 71, 70, 56, 63, 67, 84, 83, 78, 78, 49, 76),
    ('W(1,0.5)', 50): (96, 99, 99, 100, 100, 99, 99, 99, 90, 97, 98, 100, 100, 100, 100, 96, 99),
    ('W(1,0.5)', 100): (100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100),
    ('Gum(1,2)', 20): (12, 19, 26, 29, 31, 31, 32, 32, 27, 29, 31, 31, 31, 31, 27, 20, 32),
    ('Gum(1,2)', 50): (24, 44, 58, 65, 68, 71, 70, 70, 53, 62, 67, 68, 69, 65, 60, 55, 70),
    ('Gum(1,2)', 100): (47, 76, 87, 91, 93, 95, 95, 95, 80, 90, 93, 94, 94, 92, 89, 89, 94),
    ('LN(0,1)', 20): (76, 84, 88, 90, 90, 88, 87, 87, 77, 82, 85, 93, 93, 91, 90, 72, 90),
    ('LN(0,1)', 50): (99, 100, 100, 100, 100, 100, 100, 100, 99, 100, 100, 100, 100, 100, 100, 100, 100),
    ('LN(0,1)', 100): (100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100, 100),
}


# column names for the library labels of the default-tuned statistics
_COLUMN_ALIASES = {"BHEP(1)": "BHEP", "BE(1)": "BE"}


def table3_value(alternative: str, n: int, statistic: str) -> int:
    statistic = _COLUMN_ALIASES.get(statistic, statistic)
    row = TABLE3.get((alternative, n))
    if row is None or statistic not in TABLE3_STATISTICS:
        raise InvalidInput(f"no published rate for ({alternative}, n={n}, {statistic})")
    return row[TABLE3_STATISTICS.index(statistic)]


# Rows whose label does not name the law that produced the rates.  The
# mixture labels give the component standard deviation as the third
# parameter.  The W(1,0.5) rates match shape 1 (an exponential law), i.e. the
# two Weibull parameters swapped.  Everything else parses directly.  Values
# are AlternativeSpec (family, params) pairs.
TABLE3_GENERATING_LAW = {
    "NMix(0.3,1,0.25)": ("NMix", (0.3, 1.0, 0.25 ** 2)),
    "NMix(0.5,1,4)": ("NMix", (0.5, 1.0, 4.0 ** 2)),
    "W(1,0.5)": ("Weibull", (0.5, 1.0)),
}


def table3_alternative(label: str):
    """AlternativeSpec that generated the TABLE3 row ``label``."""
    from .alternatives import AlternativeSpec, parse_alternative

    if label in TABLE3_GENERATING_LAW:
        return AlternativeSpec(*TABLE3_GENERATING_LAW[label])
    return parse_alternative(label)
