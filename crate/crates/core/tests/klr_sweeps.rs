use fc_dyck_core::klr::Operator;
use fc_dyck_core::{
    build_module, check_relations, component_of, enumerate_fc, sweep, HeightGuard, Quiver,
    Relation,
};
use proptest::prelude::*;

#[test]
fn every_module_up_to_rank_four_is_valid() {
    for n in 1..=4 {
        let fwd = sweep(&Quiver::forward(n), 6, HeightGuard::default()).unwrap();
        let bwd = sweep(&Quiver::backward(n), 6, HeightGuard::default()).unwrap();
        assert!(fwd.passed(), "{fwd:?}");
        assert!(bwd.passed(), "{bwd:?}");
        assert_eq!(fwd.components, bwd.components);
        let verdicts = |r: &fc_dyck_core::SweepReport| {
            r.relations.iter().map(|o| (o.id, o.passed(), o.checks)).collect::<Vec<_>>()
        };
        assert_eq!(verdicts(&fwd), verdicts(&bwd));
    }
}

#[test]
fn mixed_orientation() {
    let q = Quiver::parse(4, "><>").unwrap();
    assert!(sweep(&q, 6, HeightGuard::default()).unwrap().passed());
}

fn corrupted_case() -> impl Strategy<Value = (usize, usize, usize, usize, usize, i64)> {
    (2usize..=4).prop_flat_map(|n| {
        let forms = (2..=6).map(|k| enumerate_fc(n, k).len()).sum::<usize>();
        (Just(n), 0..forms, any::<usize>(), any::<usize>(), any::<usize>(), 1i64..=3)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Adding a crossing `v_b -> v_a` that the module does not have always
    /// breaks the idempotent intertwining relation.
    #[test]
    fn corrupted_crossing_is_detected((n, pick, r, b, a, value) in corrupted_case()) {
        let forms: Vec<_> = (2..=6).flat_map(|k| enumerate_fc(n, k)).collect();
        let c = component_of(&forms[pick].to_word()).unwrap();
        let q = Quiver::forward(n);
        let module = build_module(&c, &q).unwrap();
        let r = 1 + r % (module.height() - 1);
        let b = b % module.dim();
        let target = module.basis()[b].swap_positions(r).unwrap();
        let rows: Vec<usize> = (0..module.dim()).filter(|&x| module.basis()[x] != target).collect();
        let a = rows[a % rows.len()];
        let mut op: Operator = module.psi(r).clone();
        op[(a, b)] += value;
        let broken = module.with_psi(r, op);
        let words = c.content().words(HeightGuard::default()).unwrap();
        let report = check_relations(&broken, &q, &words);
        prop_assert!(!report.outcome(Relation::PsiIdempotent).passed());
    }
}
