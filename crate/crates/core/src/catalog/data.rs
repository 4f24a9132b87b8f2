//! Transcribed families and displayed matrices, kept exactly as printed.

/// Global parameter order; every family lists its parameters in this order.
pub(super) const PARAMETER_ORDER: [&str; 5] = ["a1", "a2", "a4", "b1", "b2"];

pub(super) struct RawFamily {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub source: &'static str,
    pub rows: [&'static [&'static str]; 2],
}

pub(super) const FAMILIES: &[RawFamily] = &[
    RawFamily {
        name: "A1",
        params: &["a1", "a2", "a4", "b1"],
        source: "binary classification",
        rows: [&["a1", "a2", "a2 + 1", "a4"], &["b1", "-a1", "-a1 + 1", "-a2"]],
    },
    RawFamily {
        name: "A2",
        params: &["a1", "b1", "b2"],
        source: "binary classification",
        rows: [&["a1", "0", "0", "1"], &["b1", "b2", "1 - a1", "0"]],
    },
    RawFamily {
        name: "A3",
        params: &["b1", "b2"],
        source: "binary classification",
        rows: [&["0", "1", "1", "0"], &["b1", "b2", "1", "-1"]],
    },
    RawFamily {
        name: "A4",
        params: &["a1", "b2"],
        source: "binary classification",
        rows: [&["a1", "0", "0", "0"], &["0", "b2", "1 - a1", "0"]],
    },
    RawFamily {
        name: "A5",
        params: &["a1"],
        source: "binary classification",
        rows: [&["a1", "0", "0", "0"], &["1", "2*a1 - 1", "1 - a1", "0"]],
    },
    RawFamily {
        name: "A6",
        params: &["a1", "b1"],
        source: "binary classification",
        rows: [&["a1", "0", "0", "1"], &["b1", "1 - a1", "-a1", "0"]],
    },
    RawFamily {
        name: "A7",
        params: &["b1"],
        source: "binary classification",
        rows: [&["0", "1", "1", "0"], &["b1", "1", "0", "-1"]],
    },
    RawFamily {
        name: "A8",
        params: &["a1"],
        source: "binary classification",
        rows: [&["a1", "0", "0", "0"], &["0", "1 - a1", "-a1", "0"]],
    },
    RawFamily {
        name: "A9",
        params: &[],
        source: "binary classification",
        rows: [&["1/3", "0", "0", "0"], &["1", "2/3", "-1/3", "0"]],
    },
    RawFamily {
        name: "A10",
        params: &[],
        source: "binary classification",
        rows: [&["0", "1", "1", "0"], &["0", "0", "0", "-1"]],
    },
    RawFamily {
        name: "A11",
        params: &[],
        source: "binary classification",
        rows: [&["0", "1", "1", "0"], &["1", "0", "0", "-1"]],
    },
    RawFamily {
        name: "A12",
        params: &[],
        source: "binary classification",
        rows: [&["0", "0", "0", "0"], &["1", "0", "0", "0"]],
    },
    RawFamily {
        name: "B1",
        params: &["a1", "a2", "a4", "b1"],
        source: "generated 3-algebra table",
        rows: [
            &[
                "a2*b1 + a1^2",
                "0",
                "a1 + a2",
                "a1*a4 - a2^2",
                "a4*b1 + a2*a1 + a1",
                "a2^2 - a2 - a1*a4",
                "a2^2 + 2*a2 - a1*a4 + a4 + 1",
                "a4",
            ],
            &[
                "0",
                "a2*b1 + a1^2",
                "a2*b1 + a1^2 - a1 + b1",
                "a4*b1 + a1*a2",
                "-a2*b1 - a1^2 + a1",
                "a2",
                "1 - a1",
                "a2^2 - a1*a4 + a4",
            ],
        ],
    },
    RawFamily {
        name: "B2",
        params: &["a1", "b1", "b2"],
        source: "generated 3-algebra table",
        rows: [
            &["a1^2", "0", "0", "a1", "b1", "b2", "1 - a1", "0"],
            &["a1*b1 + b2*b1", "b2^2", "(1 - a1)*b2", "b1", "a1*(1 - a1)", "0", "0", "1 - a1"],
        ],
    },
    RawFamily {
        name: "B3",
        params: &["b1", "b2"],
        source: "generated 3-algebra table",
        rows: [
            &["b1", "b2", "1", "-1", "0", "1", "1", "0"],
            &["b1*b2", "b2^2 + b1", "b1 + b2", "-b2", "-b1", "1 - b2", "0", "1"],
        ],
    },
    RawFamily {
        name: "B4",
        params: &["a1", "b2"],
        source: "generated 3-algebra table",
        rows: [
            &["a1^2", "0", "0", "0", "0", "0", "0", "0"],
            &["0", "b2^2", "(1 - a1)*b2", "0", "a1*(1 - a1)", "0", "0", "0"],
        ],
    },
    RawFamily {
        name: "B5",
        params: &["a1"],
        source: "generated 3-algebra table",
        rows: [
            &["a1^2", "0", "0", "0", "0", "0", "0", "0"],
            &["3*a1 - 1", "(2*a1 - 1)^2", "(2*a1 - 1)*(1 - a1)", "0", "a1*(1 - a1)", "0", "0", "0"],
        ],
    },
    RawFamily {
        name: "B6",
        params: &["a1", "b1"],
        source: "generated 3-algebra table",
        rows: [
            &["a1^2", "0", "0", "a1", "b1", "1 - a1", "-a1", "0"],
            &["b1", "(1 - a1)^2", "-a1*(1 - a1)", "b1", "-a1^2", "0", "0", "-a1"],
        ],
    },
    RawFamily {
        name: "B7",
        params: &["b1"],
        source: "generated 3-algebra table",
        rows: [
            &["b1", "b1 + 1", "0", "-1", "0", "1", "1", "0"],
            &["b1", "1", "b1", "-1", "-b1", "-1", "0", "1"],
        ],
    },
    RawFamily {
        name: "B8",
        params: &["a1"],
        source: "generated 3-algebra table",
        rows: [
            &["a1^2", "0", "0", "0", "a1^2", "0", "0", "0"],
            &["0", "(1 - a1)^2", "-a1*(1 - a1)", "0", "0", "0", "0", "0"],
        ],
    },
    RawFamily {
        name: "B9",
        params: &[],
        source: "generated 3-algebra table",
        rows: [&["1/9", "0", "0", "0", "0", "0", "0", "0"], &["1", "4/9", "-2/9", "0", "-1/9", "0", "0", "0"]],
    },
    RawFamily {
        name: "B10",
        params: &[],
        source: "generated 3-algebra table",
        rows: [&["0", "0", "0", "-1", "0", "1", "1", "0"], &["0", "0", "0", "0", "0", "0", "0", "1"]],
    },
    RawFamily {
        name: "B11",
        params: &[],
        source: "generated 3-algebra table",
        rows: [&["1", "0", "0", "-1", "-1", "1", "1", "0"], &["0", "1", "1", "0", "0", "0", "0", "1"]],
    },
    RawFamily {
        name: "Cstar",
        params: &[],
        source: "inexpressible 3-algebra",
        rows: [&["1", "0", "0", "1", "0", "1", "-1", "0"], &["0", "-1", "1", "0", "1", "0", "0", "1"]],
    },
    RawFamily {
        name: "Cdagger",
        params: &[],
        source: "3-algebra shared by two non-isomorphic generators",
        rows: [&["1/9", "0", "0", "0", "0", "0", "0", "0"], &["0", "1/9", "-2/9", "0", "2/9", "0", "0", "0"]],
    },
    RawFamily {
        name: "Ex52",
        params: &[],
        source: "totally associative example",
        rows: [&["1", "0", "0", "0", "0", "0", "0", "0"], &["0", "1", "0", "0", "0", "0", "0", "0"]],
    },
];

/// A matrix displayed next to a named specialization.
pub(super) struct RawDisplay {
    pub label: &'static str,
    pub family: &'static str,
    pub point: &'static [&'static str],
    pub rows: [&'static [&'static str]; 2],
}

/// The totally associative list, items (i) to (viii). Item (vii) names two
/// specializations sharing one display; the second is listed as (vii').
pub(super) const TOTALLY_ASSOCIATIVE: &[RawDisplay] = &[
    RawDisplay {
        label: "i",
        family: "B2",
        point: &["0", "0", "0"],
        rows: [&["0", "0", "0", "0", "0", "0", "1", "0"], &["0", "0", "0", "0", "0", "0", "0", "1"]],
    },
    RawDisplay {
        label: "ii",
        family: "B2",
        point: &["1/2", "0", "-1/2"],
        rows: [
            &["1/4", "0", "0", "1/2", "0", "-1/2", "1/2", "0"],
            &["0", "1/4", "1/4", "0", "1/4", "0", "0", "1/2"],
        ],
    },
    RawDisplay {
        label: "iii",
        family: "B2",
        point: &["1/2", "0", "1/2"],
        rows: [
            &["1/4", "0", "0", "1/2", "0", "1/2", "1/2", "0"],
            &["0", "1/4", "1/4", "0", "1/4", "0", "0", "1/2"],
        ],
    },
    RawDisplay {
        label: "iv",
        family: "B4",
        point: &["1/2", "-1/2"],
        rows: [&["1/4", "0", "0", "0", "0", "0", "0", "0"], &["0", "1/4", "-1/4", "0", "1/4", "0", "0", "0"]],
    },
    RawDisplay {
        label: "v",
        family: "B4",
        point: &["1/2", "0"],
        rows: [&["1/4", "0", "0", "0", "0", "0", "0", "0"], &["0", "0", "0", "0", "1/4", "0", "0", "0"]],
    },
    RawDisplay {
        label: "vi",
        family: "B4",
        point: &["1/2", "1/2"],
        rows: [&["1/4", "0", "0", "0", "0", "0", "0", "0"], &["0", "1/4", "1/4", "0", "1/4", "0", "0", "0"]],
    },
    RawDisplay {
        label: "vii",
        family: "B4",
        point: &["1", "-1"],
        rows: [&["1", "0", "0", "0", "0", "0", "0", "0"], &["0", "1", "0", "0", "0", "0", "0", "0"]],
    },
    RawDisplay {
        label: "vii'",
        family: "B4",
        point: &["1", "1"],
        rows: [&["1", "0", "0", "0", "0", "0", "0", "0"], &["0", "1", "0", "0", "0", "0", "0", "0"]],
    },
    RawDisplay {
        label: "viii",
        family: "B4",
        point: &["1", "0"],
        rows: [&["1", "0", "0", "0", "0", "0", "0", "0"], &["0", "0", "0", "0", "0", "0", "0", "0"]],
    },
];

/// Nontrivial 2-dimensional associative algebras, items (i) to (vi).
pub(super) const ASSOCIATIVE_BINARY: &[RawDisplay] = &[
    RawDisplay {
        label: "i",
        family: "A2",
        point: &["1/2", "0", "1/2"],
        rows: [&["1/2", "0", "0", "1"], &["0", "1/2", "1/2", "0"]],
    },
    RawDisplay { label: "ii", family: "A4", point: &["1", "0"], rows: [&["1", "0", "0", "0"], &["0", "0", "0", "0"]] },
    RawDisplay {
        label: "iii",
        family: "A4",
        point: &["1/2", "1/2"],
        rows: [&["1/2", "0", "0", "0"], &["0", "1/2", "1/2", "0"]],
    },
    RawDisplay { label: "iv", family: "A4", point: &["1", "1"], rows: [&["1", "0", "0", "0"], &["0", "1", "0", "0"]] },
    RawDisplay {
        label: "v",
        family: "A4",
        point: &["1/2", "0"],
        rows: [&["1/2", "0", "0", "0"], &["0", "0", "1/2", "0"]],
    },
    RawDisplay { label: "vi", family: "A12", point: &[], rows: [&["0", "0", "0", "0"], &["1", "0", "0", "0"]] },
];

/// Non-associative binary algebras generating totally associative 3-algebras:
/// (generator family, point, generated family).
pub(super) const NONASSOC_GENERATORS: &[(&str, &[&str], &str)] = &[
    ("A2", &["0", "0", "0"], "B2"),
    ("A2", &["1/2", "0", "-1/2"], "B2"),
    ("A4", &["1/2", "-1/2"], "B4"),
    ("A4", &["1", "-1"], "B4"),
];

/// Totally associative points listed for the scanned families.
pub(super) const TOTASSOC_POINTS: &[(&str, &[&[&str]])] = &[
    ("B2", &[&["0", "0", "0"], &["1/2", "0", "-1/2"], &["1/2", "0", "1/2"]]),
    (
        "B4",
        &[
            &["0", "0"],
            &["1/2", "-1/2"],
            &["1/2", "0"],
            &["1/2", "1/2"],
            &["1", "-1"],
            &["1", "0"],
            &["1", "1"],
        ],
    ),
];

/// Default scan grid, used for every parameter.
pub(super) const DEFAULT_GRID: [&str; 6] = ["-1", "-1/2", "0", "1/3", "1/2", "1"];

/// Table entries known to disagree with direct expansion, as
/// (row, l, i, j, k), 1-based.
pub(super) const TABLE_ERRATA: &[(usize, [usize; 4])] = &[
    (1, [1, 2, 1, 2]),
    (7, [1, 1, 1, 2]),
    (7, [2, 1, 1, 2]),
    (8, [1, 2, 1, 1]),
    (8, [2, 2, 1, 1]),
    (11, [1, 2, 1, 1]),
    (11, [2, 2, 1, 1]),
];

/// Displayed totally associative matrices that disagree with their named
/// specialization, as (label, l, i, j, k).
pub(super) const DISPLAY_ERRATA: &[(&str, [usize; 4])] = &[("ii", [2, 1, 2, 1])];

/// Parameter samples for the isomorphic alternate forms of A2 and A6.
pub(super) const ALTERNATE_FORM_SAMPLES: &[(&str, &[&[&str]])] = &[
    ("A2", &[&["1", "1", "1"], &["1/2", "1/3", "0"], &["-1", "2", "1/2"]]),
    ("A6", &[&["1", "1"], &["1/2", "1/3"], &["-1", "2"]]),
];

/// Values rotated through the parameters when sampling families.
pub(super) const SAMPLE_VALUES: [&str; 5] = ["1/2", "2", "-1", "1/3", "0"];
