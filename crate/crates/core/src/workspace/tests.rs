use super::*;

const TUTORIAL: &str = include_str!("../../fixtures/tutorial.hopf");

#[test]
fn one_group() {
    let ws = parse_workspace("group C2 = perm(2)[(1 2)]").unwrap();
    assert_eq!(ws.group_decl("C2").unwrap().table.order(), 2);
    assert_eq!(ws.degree, DEFAULT_DEGREE);
}

#[test]
fn tutorial_round_trips() {
    let ws = parse_workspace(TUTORIAL).unwrap();
    let text = ws.to_text();
    let again = parse_workspace(&text).unwrap();
    assert_eq!(again, ws);
    assert_eq!(again.to_text(), text);
    assert_eq!(ws.sub("A3").unwrap().subgroup().len(), 3);
    assert_eq!(ws.hopf("Swap").unwrap().lie_dim(), 2);
}

#[test]
fn undeclared_basis_name() {
    let doc = "degree 2\nlie g { basis x y\n  bracket [x, y] = w }\n";
    assert_eq!(
        parse_workspace(doc).unwrap_err(),
        Error::Semantic {
            line: 3,
            message: "unknown basis element `w`".into()
        }
    );
}

#[test]
fn syntax_errors_have_columns() {
    match parse_workspace("group C2 = perm(2)[(1 2)\n").unwrap_err() {
        Error::Syntax { line, column, .. } => assert_eq!((line, column), (1, 25)),
        e => panic!("{e}"),
    }
    assert!(matches!(parse_workspace("hopf H = K[G]").unwrap_err(), Error::Semantic { line: 1, .. }));
    assert!(matches!(parse_workspace("frobnicate x").unwrap_err(), Error::Syntax { .. }));
}

#[test]
fn invalid_constants_are_rejected() {
    let doc = "lie g { basis x y z; bracket [x, y] = z; bracket [y, z] = x; bracket [x, z] = x }";
    assert!(matches!(parse_workspace(doc).unwrap_err(), Error::Semantic { .. }));
    let doc = "group C5 = perm(5)[(1 2 3 4 5)]\ngroup C2 = perm(2)[(1 2)]\nhopf K5 = K[C5]\nhopf K2 = K[C2]\naction a : K2 on K5 { (1 2) => aut([], [(1 2 3 4 5) -> (1 3 5 2 4)]) }";
    assert!(matches!(parse_workspace(doc).unwrap_err(), Error::Semantic { line: 5, .. }));
}
