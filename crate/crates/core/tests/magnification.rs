use rootcluster::catalog::catalog;
use rootcluster::clustercalc::{cluster_report, link_profile};
use rootcluster::constructions::{cyclic, klein};
use rootcluster::magnification::{detect_strong_magnification, magnify};
use rootcluster::ExtensionPair;

const MAX_PRODUCT: usize = 1000;

#[test]
fn every_fixture_magnifies_and_is_detected() {
    let factors = [cyclic(2).unwrap(), cyclic(3).unwrap(), klein()];
    let mut checked = 0;
    for fixture in catalog() {
        let p = fixture.pair().unwrap();
        if p.degree() <= 2 {
            continue;
        }
        let base = cluster_report(&p).unwrap();
        let base_link = link_profile(&p).unwrap();
        for r in &factors {
            let k = r.order();
            if p.group().order() * k > MAX_PRODUCT {
                continue;
            }
            let q = magnify(&p, r).unwrap();
            let mag = cluster_report(&q).unwrap();
            assert_eq!((mag.n, mag.r, mag.s), (base.n * k, base.r * k, base.s), "{}", fixture.name);
            let link = link_profile(&q).unwrap();
            assert_eq!((link.t, link.u), (base_link.t * k, base_link.u), "{}", fixture.name);

            let found = detect_strong_magnification(&q).unwrap();
            let recovered = found.iter().any(|d| {
                d.b.order() == k && {
                    let back = ExtensionPair::new(q.group(), &d.l_subgroup).unwrap().reduce().unwrap();
                    let c = cluster_report(&back).unwrap();
                    (c.n, c.r, c.s) == (base.n, base.r, base.s)
                }
            });
            assert!(recovered, "{} by order {k}", fixture.name);
            checked += 1;
        }
    }
    assert!(checked >= 20, "only {checked} magnifications checked");
}
