use homcert_cli::ast::{Item, TaskKind};
use homcert_cli::fixtures::{self, DENOMINATORS, EXAMPLES};
use homcert_cli::{compile, parse, parse_syntax, run, run_script, Overrides, Report, RunOptions};
use serde_json::Value;

fn run_src(src: &str) -> Report {
    run_script(&parse(src).unwrap(), &Overrides::default(), RunOptions::default()).unwrap()
}

fn result(r: &Report, i: usize) -> &Value {
    r.tasks[i]
        .result
        .as_ref()
        .unwrap_or_else(|| panic!("task {i} failed: {:?}", r.tasks[i].error))
}

#[test]
fn one_ring_one_task() {
    let s = parse("ring R = F(101)[x,y] / (x^2, y^2); task certify(R, tor_persistent);").unwrap();
    assert_eq!(s.num_declarations(), 1);
    assert_eq!(s.tasks().count(), 1);
    assert!(matches!(s.items[0], Item::Ring(_)));
}

#[test]
fn inhomogeneous_ring_reports_its_line() {
    let e = parse("option max_i = 3;\nring R = Q[x] / (x^2 - 1);").unwrap_err();
    assert_eq!(e.line(), 2);
    assert!(e.message.contains("not homogeneous"), "{e}");
    let shown = e.render("option max_i = 3;\nring R = Q[x] / (x^2 - 1);", "s.hc");
    assert!(shown.contains("s.hc:2:"));
    assert!(shown.contains("^"));
}

#[test]
fn module_over_declared_ring() {
    let s = parse("ring R = Q[x]; module M = coker(R, rows=1, [[x]]);").unwrap();
    let Item::Module(m) = &s.items[1] else { panic!() };
    assert_eq!(m.name.name, "M");
    assert!(parse("module M = coker(R, rows=1, [[x]]);").is_err());
}

#[test]
fn certify_complete_intersection() {
    let r = run_src("ring R = k[x,y] / (x^2, y^2); task certify(R, tor_persistent);");
    let t = &r.tasks[0];
    assert_eq!(t.kind, TaskKind::Certify);
    let c = t.certificate.as_ref().unwrap();
    assert_eq!(c.clause.as_deref(), Some("main/complete-intersection"));
    assert_eq!(result(&r, 0)["statement"], "the ring is Tor-persistent");
}

#[test]
fn tor_task_reports_ranks_and_window() {
    let r = run_src(
        "ring R = k[x,y] / (x^2, y^2); module M = coker(R, rows=1, [[x]]);\n\
         task tor(R, M, M, max_i=8);",
    );
    let res = result(&r, 0);
    let ranks: Vec<u64> = res["ranks"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    assert_eq!(ranks, vec![2; 9]);
    let w = r.tasks[0].window.as_ref().unwrap();
    assert_eq!(w["max_i"], 8);
    assert_eq!(w["vanishing"]["verdict"], "nonvanishing_in_window");
    assert_eq!(r.tasks[0].inputs["max_i"], "8");
}

#[test]
fn empty_script() {
    let r = run_src("");
    assert!(r.tasks.is_empty());
    assert!(r.declarations.is_empty());
    let r = run_src("# only a comment\n");
    assert!(r.tasks.is_empty());
}

#[test]
fn task_errors_are_embedded() {
    let r = run_src(
        "ring P = Q[x,y]; module A = coker(P, rows=1, [[x]]);\n\
         deform Bad = P / (x^2, x*y);\n\
         task tor(P, A, A, max_i=2);\n\
         task profile(Bad);\n\
         task selmer(1);\n\
         task profile(P);",
    );
    assert_eq!(r.tasks.len(), 4);
    assert_eq!(r.tasks[0].error.as_ref().unwrap().kind, "RequiresDegreeBound");
    assert_eq!(r.tasks[1].error.as_ref().unwrap().kind, "DeclarationFailed");
    assert!(r.declarations[2].error.as_ref().unwrap().message.contains("regular"));
    assert_eq!(r.tasks[2].error.as_ref().unwrap().kind, "InvalidInput");
    assert_eq!(result(&r, 3)["edim"], 2);
}

#[test]
fn reports_are_deterministic() {
    let script = parse_syntax(EXAMPLES).and_then(fixtures::seed).unwrap();
    let program = compile(&script, &Overrides::default()).unwrap();
    let a = run(&program, RunOptions::default()).to_json();
    let b = run(&program, RunOptions::default()).to_json();
    let c = run(
        &program,
        RunOptions {
            sequential: true,
            ..RunOptions::default()
        },
    )
    .to_json();
    assert_eq!(a, b);
    assert_eq!(a, c);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert!(v["version"].is_string());
    assert!(v["tasks"].as_array().unwrap().iter().all(|t| t["timing_ms"].is_null()));
}

#[test]
fn denominator_fixtures() {
    let r = run_src(DENOMINATORS);
    for i in 0..4 {
        let res = result(&r, i);
        assert_eq!(res["good"], true, "task {i}");
        assert_eq!(res["factorization"]["r"], serde_json::json!(["1"]));
    }
    let sq = serde_json::json!(["1", "2", "1"]);
    for i in 0..3 {
        assert_eq!(result(&r, i)["factorization"]["q"], sq);
    }
    assert_eq!(
        result(&r, 3)["factorization"]["q"],
        serde_json::json!(["1", "5", "10", "10", "5", "1"])
    );
    assert_eq!(
        result(&r, 3)["factorization"]["p"],
        serde_json::json!(["1", "-5", "10", "-11", "5", "-1"])
    );
    assert_eq!(result(&r, 5)["linkage_denominator"]["r"], serde_json::json!(["1", "-1", "1"]));
    assert_eq!(result(&r, 4)["report"]["irreducible"], true);
}

#[test]
fn example_fixtures() {
    let script = parse_syntax(EXAMPLES).and_then(fixtures::seed).unwrap();
    let r = run_script(&script, &Overrides::default(), RunOptions::default()).unwrap();
    assert!(r.declarations.iter().all(|d| d.error.is_none()), "{:?}", r.declarations);
    for t in &r.tasks {
        assert!(t.error.is_none(), "{}: {:?}", t.task, t.error);
    }
    let find = |text: &str| r.tasks.iter().find(|t| t.task == text).unwrap();
    let gap = find("task certify(GaP, tor_persistent);");
    assert_eq!(gap.certificate.as_ref().unwrap().clause.as_deref(), Some("short-hilbert/persistent"));
    let gap_h = find("task hilbert(GaP);").result.as_ref().unwrap();
    assert_eq!(gap_h["coefficients"].as_array().unwrap()[0..4], ["1", "4", "3", "0"]);
    let omega = find("task tor(P4, Omega3, Omega3, max_i=6, lo=0, hi=10);").result.as_ref().unwrap();
    let ranks = omega["ranks"].as_array().unwrap();
    assert!(ranks[0].as_u64().unwrap() > 0);
    assert!(ranks[1..].iter().all(|v| v == 0));
    let socle = find("task certify(SocleRing, ext_persistent);");
    assert_eq!(socle.result.as_ref().unwrap()["verdict"], "certified");
}

#[test]
fn fixture_names_cannot_be_redeclared() {
    let s = fixtures::seed(parse_syntax("ring CI2 = Q[x];").unwrap()).unwrap();
    let e = compile(&s, &Overrides::default()).unwrap_err();
    assert!(e.message.contains("by a fixture"), "{e}");
    assert_eq!(e.line(), 1);
}

#[test]
fn overrides_take_precedence() {
    let s = parse_syntax("option field = F(7); option max_i = 3; ring R = k[x] / (x^2); task betti(R);").unwrap();
    let p = compile(
        &s,
        &Overrides {
            field: Some(homcert::arith::Field::Rational),
            max_i: Some(5),
        },
    )
    .unwrap();
    let r = run(&p, RunOptions::default());
    assert_eq!(r.declarations[0].value.as_deref(), Some("Q[x]/(x^2)"));
    assert_eq!(result(&r, 0)["totals"].as_array().unwrap().len(), 6);
    let v: Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["settings"]["tolerance"], "1/1000000000");
}
