use polypair::io::{
    export_seeds, load_seed, parse_bracket_format, parse_facet_list, seed_database, seed_file_name, seed_names,
    serialize_bracket, serialize_facet_list, IoError,
};

#[test]
fn every_seed_round_trips_through_both_formats() {
    for e in seed_database().unwrap() {
        let p = &e.incidence;
        assert_eq!(p.pair(), e.expected_pair, "{}", e.name);
        let back = parse_facet_list(&serialize_facet_list(p)).unwrap();
        assert_eq!(back, *p, "{}", e.name);
        if p.num_vertices() <= 10 {
            let text = serialize_bracket(p).unwrap();
            assert_eq!(parse_bracket_format(&text).unwrap().canonical(), p.canonical(), "{}", e.name);
        } else {
            assert!(matches!(serialize_bracket(p), Err(IoError::TooManyVertices(_))));
        }
    }
}

#[test]
fn seed_names_are_unique_and_loadable() {
    let names = seed_names();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), names.len());
    for n in names {
        assert_eq!(load_seed(n).unwrap().name, n);
    }
}

#[test]
fn export_writes_parseable_files() {
    let dir = tempfile::tempdir().unwrap();
    let paths = export_seeds(dir.path()).unwrap();
    assert_eq!(paths.len(), seed_database().unwrap().len());
    let p15 = std::fs::read_to_string(dir.path().join(seed_file_name("P15*"))).unwrap();
    assert!(p15.starts_with("# P15* (13,55) dual of P15"));
    assert_eq!(parse_facet_list(&p15).unwrap().pair(), (13, 55));
}

#[test]
fn line_format_variants() {
    let square_pyramid = "# apex 4\n0 1 2 3\n0 1 4\n1 2 4\n2 3 4\n3 0 4\n";
    assert_eq!(parse_facet_list(&format!("dim=3\n{square_pyramid}")).unwrap().dim(), 3);
    assert_eq!(parse_facet_list(&format!("3\n{square_pyramid}")).unwrap().num_facets(), 5);
    let simplex = parse_facet_list("0 1 2 3\n0 1 2 4\n0 1 3 4\n0 2 3 4\n1 2 3 4\n").unwrap();
    assert_eq!((simplex.dim(), simplex.pair()), (4, (5, 20)));
    let bracket = parse_facet_list("[3210]\n[4210]\n[4310]\n[4320]\n[4321]").unwrap();
    assert_eq!(bracket.canonical(), simplex.canonical());
}

#[test]
fn syntax_errors_carry_line_numbers() {
    match parse_facet_list("0 1 2 3\n0 x 2\n") {
        Err(IoError::Syntax { line, .. }) => assert_eq!(line, 2),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_bracket_format("[321"), Err(IoError::Syntax { .. })));
}

#[test]
fn invalid_complexes_are_rejected() {
    let e = parse_facet_list("0 1 2 3\n0 1 2 3\n").unwrap_err();
    assert!(matches!(e, IoError::Validation(_)), "{e:?}");
    let e = parse_facet_list("dim=4\n0 1 2\n").unwrap_err();
    assert!(matches!(e, IoError::Validation(_)), "{e:?}");
}
