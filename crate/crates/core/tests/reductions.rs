use wrdlab::exact::{gamma_r_exact, min_red_blue_cover, rxc3_exact};
use wrdlab::reductions::{
    attach_p4, construct_a1, construct_a2, construct_a3, cover_certificate, red_blue_certificate,
    RbdInstance, ReducedInstance, Rxc3Instance,
};
use wrdlab::{is_wrd, Graph, SolverConfig};

#[test]
fn construction_sizes() {
    let forced = Rxc3Instance::forced();
    let a2 = construct_a2(&forced).unwrap();
    assert_eq!((a2.graph.n(), a2.threshold), (10, 4));
    let a1 = construct_a1(&forced).unwrap();
    assert_eq!((a1.graph.n(), a1.threshold), (15, 4));
    for q in 1..=4 {
        let inst = Rxc3Instance::random(q, q as u64).unwrap();
        assert_eq!(construct_a1(&inst).unwrap().graph.n(), 15 * q);
        assert_eq!(construct_a2(&inst).unwrap().graph.n(), 9 * q + 1);
    }
    assert_eq!(attach_p4(&Graph::cycle(4)).0.n(), 20);
}

#[test]
fn witnesses_verify_on_random_instances() {
    for seed in 0..30u64 {
        let inst = Rxc3Instance::random(1 + seed as usize % 4, seed).unwrap();
        assert!(
            construct_a1(&inst).unwrap().verify_witness().unwrap(),
            "seed {seed}"
        );
        assert!(
            construct_a2(&inst).unwrap().verify_witness().unwrap(),
            "seed {seed}"
        );
        let rbd = RbdInstance::random(4, 5, 0.4, 2, seed).unwrap();
        assert!(construct_a3(&rbd).unwrap().verify_witness().unwrap());
    }
}

#[test]
fn cover_certificates_hit_the_threshold() {
    let mut yes = 0;
    for seed in 0..40u64 {
        let inst = Rxc3Instance::random(2 + seed as usize % 3, seed).unwrap();
        let Some(cover) = rxc3_exact(&inst).unwrap() else {
            continue;
        };
        for h in [construct_a1(&inst).unwrap(), construct_a2(&inst).unwrap()] {
            let f = cover_certificate(&h, &cover).unwrap();
            assert_eq!(f.weight(), h.threshold);
            assert!(is_wrd(&h.graph, &f).unwrap(), "seed {seed}");
        }
        yes += 1;
    }
    assert!(yes > 0);
}

#[test]
fn red_blue_certificates_and_exact_values() {
    for seed in 0..40u64 {
        let inst = RbdInstance::random(3, 4, 0.35, 0, seed).unwrap();
        let cover = min_red_blue_cover(&inst).unwrap().unwrap();
        let h = construct_a3(&inst.with_k(cover.len()).unwrap()).unwrap();
        let f = red_blue_certificate(&h, &cover).unwrap();
        assert!(is_wrd(&h.graph, &f).unwrap());
        assert_eq!(f.weight(), h.threshold);
        // the threshold is tight: the minimum cover gives γr exactly
        let (value, _) = gamma_r_exact(&h.graph, &SolverConfig::default()).unwrap();
        assert_eq!(value, h.threshold, "seed {seed}");
    }
}

#[test]
fn instances_round_trip_through_json_and_text() {
    let h = construct_a1(&Rxc3Instance::example_one()).unwrap();
    let back: ReducedInstance = serde_json::from_str(&serde_json::to_string(&h).unwrap()).unwrap();
    assert_eq!(back, h);
    let inst = Rxc3Instance::random(3, 5).unwrap();
    assert_eq!(Rxc3Instance::from_text(&inst.to_text()).unwrap(), inst);
    let rbd = RbdInstance::random(3, 3, 0.5, 1, 2).unwrap();
    assert_eq!(RbdInstance::from_text(&rbd.to_text()).unwrap(), rbd);
}
