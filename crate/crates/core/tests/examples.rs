use linqh_core::linquiver::{parse_orientation, CutKind};
use linqh_core::rep_oracle::{rep_of_interval, std_resolution, IntervalOracle};
use linqh_core::{Error, Interval, LinearQh};

const ROOT4: &str = "(((..)(..))(.(..)))";

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

#[test]
fn root4_modules() {
    let qh = LinearQh::parse("RRRRR", ROOT4).unwrap();
    let standard: Vec<_> = (1..=6).map(|i| qh.standard(i)).collect();
    let expected = [(1, 1), (2, 3), (3, 3), (4, 6), (5, 6), (6, 6)].map(|(a, b)| Interval::new(a, b));
    assert_eq!(standard, expected);
    assert_eq!(qh.costandard(4), Interval::new(1, 4));
    assert_eq!(qh.costandard(2), Interval::new(1, 2));
    let tilting = qh.tilting(&IntervalOracle::new(qh.quiver())).unwrap();
    assert_eq!(tilting[3], Interval::new(1, 6));
    assert_eq!(tilting[1], Interval::new(1, 3));
}

#[test]
fn root4_presentations() {
    let qh = LinearQh::parse("RRRRR", ROOT4).unwrap();
    let ext = qh.ext_algebra().unwrap();
    let names = sorted(ext.arrows().map(|a| a.name()).collect());
    assert_eq!(names, ["f_3^2", "f_5^4", "f_6^5", "ε_1^2", "ε_2^4"]);
    assert_eq!(ext.relations(), ["ε_2^4ε_1^2"]);
    assert!(ext.formality_check().unwrap().passed());
    let ringel = &qh.ringel_duals()[0];
    assert_eq!(sorted(ringel.relations()), ["f_2^1g_3^2", "f_4^2g_5^4"]);
}

#[test]
fn root4_borel() {
    let qh = LinearQh::parse("RRRRR", ROOT4).unwrap();
    let report = qh.borel_report(&IntervalOracle::new(qh.quiver())).unwrap();
    let gens: Vec<_> = qh.borel(&report).unwrap().generators().iter().map(ToString::to_string).collect();
    assert_eq!(gens, ["e_1", "e_2", "e_3", "e_4", "e_5", "e_6", "α_1", "α_3α_2", "α_3"]);
}

#[test]
fn llrr_gluing() {
    let qh = LinearQh::parse("LLRR", "(((..).).);(((..).).)").unwrap();
    assert_eq!(qh.deconcatenation().cuts, [(3, CutKind::Source)]);
    let p = qh.ext_algebra().unwrap();
    assert_eq!(p.dimension(), Ok(10));
    assert_eq!(sorted(p.relations()), ["ε_3^4f_2^3", "ε_4^5ε_3^4"]);
}

#[test]
fn rrllrr_configurations() {
    let q = parse_orientation("RRLLRR").unwrap();
    let decon = q.deconcatenate();
    assert_eq!(decon.cuts, [(3, CutKind::Sink), (5, CutKind::Source)]);
    assert_eq!(q.path_between(5, 3).unwrap().unwrap().to_string(), "α_3α_4");

    let yes = LinearQh::parse("RRLLRR", "(((..).).);(.((..).));((.(..)).)").unwrap();
    let oracle = IntervalOracle::new(yes.quiver());
    let report = yes.borel_report(&oracle).unwrap();
    assert!(report.verdict);
    assert!(report.sinks[0].maximal && !report.sinks[0].minimal);
    assert_eq!(yes.standard(5), Interval::new(4, 6));
    let res = std_resolution(&q, &rep_of_interval(&q, yes.standard(5)).unwrap()).unwrap();
    let mut kernel = res.p1.tops().to_vec();
    kernel.sort();
    assert_eq!(kernel, [3, 7]);

    let no = LinearQh::parse("RRLLRR", "(.(.(..)));(.((..).));(((..).).)").unwrap();
    let report = no.borel_report(&oracle).unwrap();
    assert!(!report.verdict);
    assert!(!report.witnesses.is_empty());
    assert_eq!(no.borel(&report), Err(Error::LogicBorelRefused { sink: 3 }));
}

#[test]
fn input_errors_are_classified() {
    for (o, t) in [("RRLL", "(..)"), ("RZ", "(.(..))"), ("R", "((..)"), ("R", "(..)")] {
        let e = LinearQh::parse(o, t).unwrap_err();
        assert!(e.is_input_error(), "{o} {t}: {e}");
    }
    assert!(!Error::LogicBorelRefused { sink: 3 }.is_input_error());
}
