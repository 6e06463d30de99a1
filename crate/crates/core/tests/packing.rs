use poisson_di::codebook::{
    construct_lattice, doubled_radius_cover_failures, min_saturated_count, packing_density_estimate,
    saturated_random, validate, Codebook, PackingParams,
};
use poisson_di::math::Dimension;

fn params(n: u64, r0: f64) -> PackingParams {
    PackingParams::derive(Dimension::new(n).unwrap(), 0.5, 1.0, 1.0)
        .unwrap()
        .with_radius(r0)
        .unwrap()
}

#[test]
fn saturated_packings_meet_every_invariant() {
    for (n, r0) in [(2u64, 0.1), (3, 0.15), (4, 0.2)] {
        let p = params(n, r0);
        let packing = saturated_random(&p, 4096, 100_000, 99).unwrap();
        let cb = &packing.codebook;
        assert!(packing.saturated);
        assert!(validate(cb).all_ok());
        assert!(cb.len() as u64 >= min_saturated_count(&p));
        assert_eq!(doubled_radius_cover_failures(cb, 10_000, 5), 0);
        let d = packing_density_estimate(cb, 50_000, 6);
        assert!(d.p_hat >= 0.5f64.powi(n as i32) - 3.0 * d.half_width());
    }
}

#[test]
fn json_roundtrip_preserves_codebook() {
    let cb = construct_lattice(&params(3, 0.1), 64).unwrap();
    let text = cb.to_json();
    let back = Codebook::from_json(&text).unwrap();
    assert_eq!(back, cb);
    assert_eq!(back.to_json(), text);
}
