use cvd_workbench::format::{parse_instance, serialize_instance};
use cvd_workbench::generate::{generate, Model};
use proptest::prelude::*;

fn model() -> impl Strategy<Value = Model> {
    let leaf = prop_oneof![
        (1u32..20, 0.0f64..=1.0).prop_map(|(n, p)| Model::Gnp { n, p }),
        (1u32..20, 1u32..5, 0.0f64..0.5)
            .prop_map(|(n, k, noise)| Model::PlantedClusters { n: n.max(k), k, noise }),
        Just(Model::BullNeighborhood),
        Just(Model::K5Gadget),
    ];
    leaf.prop_recursive(2, 4, 1, |inner| inner.prop_map(|m| Model::VcPendant(Box::new(m))))
}

proptest! {
    #[test]
    fn parse_inverts_serialize(m in model(), seed in any::<u64>(), hi in 1u64..20) {
        let wg = generate(&m, 0..=hi, seed).unwrap();
        let text = serialize_instance(&wg).unwrap();
        prop_assert_eq!(parse_instance(&text).unwrap(), wg);
    }

    #[test]
    fn vc_pendant_doubles(m in model(), seed in any::<u64>()) {
        let inner = generate(&m, 1..=1, seed).unwrap();
        let outer = generate(&Model::VcPendant(Box::new(m)), 1..=1, seed).unwrap();
        prop_assert_eq!(outer.graph().vertex_count(), 2 * inner.graph().vertex_count());
        prop_assert_eq!(outer.graph().edge_count(), inner.graph().edge_count() + inner.graph().vertex_count());
    }
}
