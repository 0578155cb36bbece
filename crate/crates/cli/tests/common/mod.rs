//! Invocations shared by the golden and acceptance tests.

pub const CASES: &[(&str, &[&str])] = &[
    ("core_eval", &["core", "eval", "--expr", "(x + 1)^2", "--bind", "x=2 + eps"]),
    ("core_st", &["core", "st", "--value", "7 + 3*eps"]),
    ("core_classify", &["core", "classify", "--value", "5*eps^2"]),
    ("core_compare", &["core", "compare", "--a", "1000000*eps", "--b", "1"]),
    ("core_leading", &["core", "leading", "--value", "2*eps^-1 + 1"]),
    ("leibniz_adequal", &["leibniz", "adequal", "--a", "eps", "--b", "4*eps"]),
    ("leibniz_geq", &["leibniz", "geq", "--a", "5 + 3*eps", "--b", "5"]),
    ("leibniz_tlh", &["leibniz", "tlh", "--value", "5 + eps"]),
    ("leibniz_dominant", &["leibniz", "dominant", "--value", "eps + 5*eps^2"]),
    ("fermat_derive", &["fermat", "derive", "--expr", "A - A^2"]),
    ("fermat_extremum", &["fermat", "extremum", "--expr", "A^3 - 3*A", "--lo", "0", "--hi", "2", "--digits", "4"]),
    ("fermat_subtangent", &["fermat", "subtangent", "--curve", "x^2", "--at", "3"]),
    ("gregory_limit", &["gregory", "limit", "--term", "(2*n^2 + 1)/n^2"]),
    ("gregory_pi", &["gregory", "pi", "--tol", "1e-10", "--precision", "30"]),
    ("euler_exp", &["euler", "exp", "--k", "3"]),
    ("euler_pentagonal", &["euler", "pentagonal", "--degree", "40"]),
    ("cauchy_continuity", &["cauchy", "continuity", "--expr", "x^2", "--at", "3,-1/2"]),
    ("cauchy_derive", &["cauchy", "derive", "--expr", "exp(x)", "--at", "0"]),
    ("cauchy_curvature", &["cauchy", "curvature", "--expr", "x^2", "--at", "0"]),
    ("stevin_root", &["stevin", "root", "--poly", "x^3 - x - 1", "--lo", "1", "--hi", "2", "--digits", "6"]),
    ("stevin_decimal_eq", &["stevin", "decimal-eq", "--a", "1.0", "--b", "0.(9)"]),
    ("stevin_expand", &["stevin", "expand", "--value", "22/7", "--digits", "6"]),
    ("error_pole", &["cauchy", "derive", "--expr", "1/x", "--at", "0"]),
];
