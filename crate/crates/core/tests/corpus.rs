//! Property checks over exhaustively enumerated small models and the
//! generator families.

use std::collections::BTreeSet;

use moufang_core::caps::Caps;
use moufang_core::decomp::{
    decompose, is_archimedean, is_semilattice, natural_order, principal_ideal, quotient, rho,
    sigma_partition, verify_congruence, DecomposeOptions, RhoTable,
};
use moufang_core::enumerate::{enumerate, enumerate_parallel, EnumerationTask};
use moufang_core::generators::{
    chain_semilattice, jordan_left_zero, radical, witness_t, zn_multiplicative, JordanParams,
};
use moufang_core::power::{bracketings_agree, power_orbit};
use moufang_core::suite::run_suite;
use moufang_core::{check_identity, ElementId, IdentityKind, Magma};

use IdentityKind::*;

fn cm_corpus(max_order: usize) -> Vec<Magma> {
    let caps = Caps::default();
    (1..=max_order)
        .flat_map(|n| {
            enumerate(
                &EnumerationTask::new(n, [Commutative, CentralMoufang]),
                &caps,
            )
            .unwrap()
        })
        .collect()
}

/// Identity evaluation written out by hand, independent of `IdentityKind::eval`.
fn oracle_holds(n: usize, t: &[usize], kind: IdentityKind) -> bool {
    let o = |a: usize, b: usize| t[a * n + b];
    let r = 0..n;
    let mut ok = true;
    for x in r.clone() {
        for y in r.clone() {
            for z in r.clone() {
                ok &= match kind {
                    Commutative => o(x, y) == o(y, x),
                    Idempotent => o(x, x) == x,
                    Associative => o(o(x, y), z) == o(x, o(y, z)),
                    CentralMoufang => o(o(x, y), o(z, x)) == o(o(x, o(y, z)), x),
                    LeftMoufang => o(x, o(y, o(x, z))) == o(o(o(x, y), x), z),
                    RightMoufang => o(o(o(z, x), y), x) == o(z, o(x, o(y, x))),
                    Eq2 => o(o(x, y), x) == o(x, y),
                    Eq3 => o(x, o(y, z)) == o(o(x, y), o(x, z)),
                };
            }
        }
    }
    ok
}

#[test]
fn pruned_enumeration_matches_naive_oracle_for_every_constraint_set() {
    let caps = Caps::default();
    for n in 1..=3usize {
        // satisfied-identity mask of every table of order n
        let total = n.pow((n * n) as u32);
        let mut tables: Vec<(Vec<usize>, u8)> = Vec::with_capacity(total);
        for code in 0..total {
            let mut rest = code;
            let mut t = vec![0; n * n];
            for cell in (0..n * n).rev() {
                t[cell] = rest % n;
                rest /= n;
            }
            let mask = IdentityKind::ALL
                .iter()
                .enumerate()
                .filter(|(_, &k)| oracle_holds(n, &t, k))
                .fold(0u8, |m, (i, _)| m | 1 << i);
            tables.push((t, mask));
        }
        for set in 1u8..=255 {
            let kinds: Vec<IdentityKind> = (0..8)
                .filter(|i| set >> i & 1 == 1)
                .map(|i| IdentityKind::ALL[i])
                .collect();
            let mut expected: Vec<Vec<usize>> = tables
                .iter()
                .filter(|(_, mask)| mask & set == set)
                .map(|(t, _)| t.clone())
                .collect();
            expected.sort();
            let got: Vec<Vec<usize>> = enumerate(&EnumerationTask::new(n, kinds.clone()), &caps)
                .unwrap()
                .iter()
                .map(Magma::entries)
                .collect();
            assert_eq!(got, expected, "order {n}, constraints {kinds:?}");
        }
    }
}

#[test]
fn commutative_moufang_order_two_excludes_two_tables() {
    let got = enumerate(
        &EnumerationTask::new(2, [Commutative, CentralMoufang]),
        &Caps::default(),
    )
    .unwrap();
    let all_symmetric: Vec<Vec<usize>> = (0..8)
        .map(|c| vec![c >> 2 & 1, c >> 1 & 1, c >> 1 & 1, c & 1])
        .collect();
    let missing: Vec<&Vec<usize>> = all_symmetric
        .iter()
        .filter(|t| !got.iter().any(|m| &m.entries() == *t))
        .collect();
    assert_eq!(got.len(), 6);
    assert_eq!(missing, vec![&vec![1, 0, 0, 0], &vec![1, 1, 1, 0]]);
}

#[test]
fn parallel_enumeration_is_worker_independent() {
    let caps = Caps::default();
    let task = EnumerationTask::new(4, [Commutative, CentralMoufang]);
    let seq = enumerate(&task, &caps).unwrap();
    for threads in [1, 2, 4] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        let par = pool.install(|| enumerate_parallel(&task, &caps)).unwrap();
        assert_eq!(par, seq, "{threads} workers");
    }
}

#[test]
fn decomposition_theorem_on_small_models() {
    for m in cm_corpus(4) {
        let d = decompose(&m, DecomposeOptions::default()).unwrap();
        assert!(d.flags.all(), "{:?}", m.rows());
        let q = d.quotient.as_ref().unwrap();
        assert_eq!(q.order(), d.sigma.class_count());
        assert!(is_semilattice(q));
        for c in &d.components {
            let sub = c.submagma.as_ref().unwrap();
            assert!(is_archimedean(sub).unwrap());
            assert_eq!(sub.order(), c.members.len());
        }
        // components ordered by smallest member
        let mins: Vec<ElementId> = d.components.iter().map(|c| c.members[0]).collect();
        assert!(mins.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn lemma_suite_on_small_models() {
    let caps = Caps::default();
    for m in cm_corpus(3) {
        let r = run_suite(&m, 3, &caps).unwrap();
        assert!(r.all_hold(), "{:?}: {r:?}", m.rows());
    }
}

#[test]
fn rho_is_transitive_and_a_sigma_a_squared() {
    for m in cm_corpus(4) {
        let t = RhoTable::new(&m);
        assert_eq!(t.rho_transitivity_violation(), None, "{:?}", m.rows());
        for a in m.elements() {
            assert!(t.sigma(a, m.mul(a, a)));
        }
    }
}

#[test]
fn idempotent_models_are_semilattices() {
    for m in cm_corpus(4) {
        if !check_identity(&m, Idempotent).holds() {
            continue;
        }
        assert!(is_semilattice(&m), "{:?}", m.rows());
        assert!(check_identity(&m, Eq2).holds());
        assert!(check_identity(&m, Eq3).holds());
        natural_order(&m).unwrap();
    }
}

#[test]
fn commutative_semigroups_are_central_moufang() {
    let caps = Caps::default();
    for n in 1..=3 {
        for m in enumerate(&EnumerationTask::new(n, [Commutative, Associative]), &caps).unwrap() {
            assert!(check_identity(&m, CentralMoufang).holds());
        }
    }
}

#[test]
fn small_models_are_power_associative() {
    let caps = Caps::default();
    for m in cm_corpus(4) {
        for a in m.elements() {
            assert!(bracketings_agree(&m, a, 6, &caps).unwrap().holds());
        }
    }
}

#[test]
fn rho_on_semilattices_is_the_natural_order() {
    for k in 1..=4 {
        let c = chain_semilattice(k).unwrap();
        let grid = c.direct_product(&chain_semilattice(2).unwrap());
        for m in [c, grid] {
            let order = natural_order(&m).unwrap();
            for a in m.elements() {
                for b in m.elements() {
                    assert_eq!(rho(&m, a, b), order.leq(a, b));
                }
            }
            assert_eq!(sigma_partition(&m).unwrap().class_count(), m.order());
        }
    }
}

#[test]
fn products_of_models_stay_commutative_moufang() {
    let corpus = cm_corpus(2);
    for a in &corpus {
        for b in &corpus {
            let p = a.direct_product(b);
            assert!(check_identity(&p, Commutative).holds());
            assert!(check_identity(&p, CentralMoufang).holds());
        }
    }
}

/// Archimedean classes of (ℤ_k, ×) from the textbook definition: a ρ b iff
/// some aⁿ equals b or x·b for some x.
fn divisibility_classes(k: usize) -> Vec<Vec<usize>> {
    let divides = |a: usize, b: usize| {
        let mut p = a;
        for _ in 0..k + 1 {
            if p == b || (0..k).any(|x| x * b % k == p) {
                return true;
            }
            p = p * a % k;
        }
        false
    };
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..k {
        match classes
            .iter_mut()
            .find(|c| divides(a, c[0]) && divides(c[0], a))
        {
            Some(c) => c.push(a),
            None => classes.push(vec![a]),
        }
    }
    classes
}

#[test]
fn zn_decomposition_matches_divisibility_oracle() {
    for k in 1..=12 {
        let m = zn_multiplicative(k).unwrap();
        let d = decompose(&m, DecomposeOptions::default()).unwrap();
        assert!(d.flags.all());
        let got: Vec<Vec<usize>> = d
            .components
            .iter()
            .map(|c| c.members.iter().map(|x| x.index()).collect())
            .collect();
        assert_eq!(got, divisibility_classes(k), "Z_{k}");
    }
}

fn jordan_params() -> Vec<(u64, u32)> {
    vec![
        (3, 1),
        (3, 2),
        (3, 3),
        (3, 4),
        (5, 1),
        (5, 2),
        (5, 3),
        (7, 1),
        (7, 2),
        (11, 1),
    ]
}

#[test]
fn jordan_closed_forms() {
    for (p, m) in jordan_params() {
        let (j, enc) = jordan_left_zero(JordanParams::new(p, m).unwrap()).unwrap();
        assert!(check_identity(&j, Commutative).holds());
        for x in j.elements() {
            let wx = enc.weight(x);
            for y in j.elements() {
                assert_eq!(enc.weight(j.mul(x, y)), wx * enc.weight(y) % p);
            }
            // x^n = |x|^(n-1) x, coefficientwise
            let orbit = power_orbit(&j, x);
            let mut scale = 1u64;
            for n in 1..=10u64 {
                let expected: Vec<u64> = enc.digits(x).iter().map(|d| d * scale % p).collect();
                assert_eq!(orbit.power(n), enc.encode(&expected));
                scale = scale * wx % p;
            }
        }
    }
}

#[test]
fn jordan_witnesses_divide() {
    for (p, m) in jordan_params() {
        let (j, enc) = jordan_left_zero(JordanParams::new(p, m).unwrap()).unwrap();
        let rad: BTreeSet<ElementId> = radical(&enc).into_iter().collect();
        assert_eq!(rad.len(), p.pow(m - 1) as usize);
        for x in j.elements().filter(|x| !rad.contains(x)) {
            for y in j.elements().filter(|y| !rad.contains(y)) {
                let t = witness_t(&enc, x, y).unwrap();
                assert_eq!(j.mul(x, t), y);
            }
        }
    }
}

#[test]
fn jordan_decomposes_into_radical_and_complement() {
    for (p, m) in jordan_params() {
        let (j, enc) = jordan_left_zero(JordanParams::new(p, m).unwrap()).unwrap();
        let d = decompose(
            &j,
            DecomposeOptions {
                require_hypotheses: false,
            },
        )
        .unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.components[0].members, radical(&enc));
        assert_eq!(
            d.components[1].members.len(),
            j.order() - radical(&enc).len()
        );
        assert_eq!(d.quotient.unwrap(), chain_semilattice(2).unwrap());
        assert!(d.flags.structural());
        // the radical is an ideal
        let rad_ideal = principal_ideal(&j, d.components[0].members[0]);
        assert!(rad_ideal.members().iter().all(|x| enc.weight(*x) == 0));
        // central Moufang holds only in the field case m = 1
        assert_eq!(
            check_identity(&j, CentralMoufang).holds(),
            m == 1,
            "p={p} m={m}"
        );
    }
}

#[test]
fn congruence_and_quotient_on_sigma() {
    for m in cm_corpus(3) {
        let s = sigma_partition(&m).unwrap();
        assert!(verify_congruence(&m, &s).unwrap().is_congruence);
        let q = quotient(&m, &s).unwrap();
        for c in q.elements() {
            assert_eq!(q.mul(c, c), c);
        }
        for class in s.classes() {
            m.submagma(class).unwrap();
        }
    }
}
