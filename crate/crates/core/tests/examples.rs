mod pbw_straightening_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/pbw_straightening.rs"));
}

#[test]
fn pbw_straightening_example_runs() {
    pbw_straightening_example::run_example().expect("pbw_straightening example should run");
}

mod finite_groups_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/finite_groups.rs"));
}

#[test]
fn finite_groups_example_runs() {
    finite_groups_example::run_example().expect("finite_groups example should run");
}

mod hopf_axioms_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hopf_axioms.rs"));
}

#[test]
fn hopf_axioms_example_runs() {
    hopf_axioms_example::run_example().expect("hopf_axioms example should run");
}

mod lie_algebras_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lie_algebras.rs"));
}

#[test]
fn lie_algebras_example_runs() {
    lie_algebras_example::run_example().expect("lie_algebras example should run");
}

mod smash_product_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/smash_product.rs"));
}

#[test]
fn smash_product_example_runs() {
    smash_product_example::run_example().expect("smash_product example should run");
}

mod classifier_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/classifier.rs"));
}

#[test]
fn classifier_example_runs() {
    classifier_example::run_example().expect("classifier example should run");
}

mod centralizers_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/centralizers.rs"));
}

#[test]
fn centralizers_example_runs() {
    centralizers_example::run_example().expect("centralizers example should run");
}

mod workspace_tasks_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/workspace_tasks.rs"));
}

#[test]
fn workspace_tasks_example_runs() {
    workspace_tasks_example::run_example().expect("workspace_tasks example should run");
}
