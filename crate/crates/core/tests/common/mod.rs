#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use arclab_core::arcgeom::constructions::{hyperoval, normal_rational_curve, random_arc};
use arclab_core::certifier::v_g_check;
use arclab_core::hypersurf::{
    build_surface, cosecant_zero_audit, e_size, restriction_is_square, tangent_identity_check,
};
use arclab_core::matrix::{weight_one_in_colspace, weight_two_in_colspace};
use arclab_core::tangentfns::{
    alpha_table, check_atoc, check_segre_sign, check_sum_zero, check_theeqn, interpolate_fa, tangent_fn,
};
use arclab_core::{ArcConfig, ArcFile, Elem, GaloisField, GfMatrix, Subset};

pub const Q11_SEVEN: &str = include_str!("../../../../arcs/q11_seven.arc");
pub const Q13_SIX: &str = include_str!("../../../../arcs/q13_six.arc");
pub const Q13_NINE: &str = include_str!("../../../../arcs/q13_nine.arc");
pub const Q81_ELEVEN: &str = include_str!("../../../../arcs/q81_eleven.arc");
pub const CONIC_F5: &str = include_str!("../../../../arcs/conic_f5.arc");
pub const HYPERCONIC_F8: &str = include_str!("../../../../arcs/hyperconic_f8.arc");

pub fn arc(text: &str) -> ArcConfig {
    ArcFile::parse(text).expect("sample arcs parse").arc
}

pub fn field(p: u32, h: u32) -> Arc<GaloisField> {
    Arc::new(GaloisField::new(p, h, None).expect("supported field"))
}

pub fn conic(p: u32, h: u32) -> ArcConfig {
    normal_rational_curve(field(p, h), 3)
}

pub fn nrc(p: u32, h: u32, k: usize) -> ArcConfig {
    normal_rational_curve(field(p, h), k)
}

pub fn random(p: u32, h: u32, k: usize, size: usize, seed: u64) -> ArcConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_arc(field(p, h), k, size, &mut rng, 1000).expect("random arc of this size exists")
}

/// The arcs the identity checks run over: conics, normal rational curves,
/// hyperovals, prefixes of these, and random arcs grown point by point.
pub fn identity_arcs() -> Vec<(String, ArcConfig)> {
    let mut out = Vec::new();
    for (p, h) in [(5u32, 1u32), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1)] {
        out.push((format!("conic F{}", p.pow(h)), conic(p, h)));
    }
    for (p, k) in [(11, 4), (13, 4), (11, 5), (13, 5)] {
        out.push((format!("NRC k={k} F{p}"), nrc(p, 1, k)));
    }
    out.push(("hyperoval F4".into(), hyperoval(field(2, 2))));
    out.push(("hyperoval F8".into(), hyperoval(field(2, 3))));
    out.push(("conic F13 prefix 10".into(), conic(13, 1).prefix(10)));
    out.push(("NRC k=4 F13 prefix 11".into(), nrc(13, 1, 4).prefix(11)));
    out.push(("NRC k=5 F11 prefix 10".into(), nrc(11, 1, 5).prefix(10)));
    for (i, (p, h, k, size)) in [
        (7, 1, 3, 7),
        (11, 1, 3, 9),
        (13, 1, 3, 10),
        (13, 1, 3, 11),
        (9, 1, 3, 8),
        (11, 1, 4, 9),
        (13, 1, 4, 10),
        (8, 1, 3, 8),
    ]
    .into_iter()
    .enumerate()
    {
        let (p, h): (u32, u32) = if p == 9 {
            (3, 2)
        } else if p == 8 {
            (2, 3)
        } else {
            (p, h)
        };
        out.push((
            format!("random k={k} size {size} F{}", p.pow(h)),
            random(p, h, k, size, 1000 + i as u64),
        ));
    }
    out
}

/// `b` lies in the column space of `m`.
pub fn in_colspace(m: &GfMatrix, b: &[Elem]) -> bool {
    m.solve(b).unwrap().is_some()
}

pub fn unit(len: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![Elem::ZERO; len];
    v[i] = Elem::ONE;
    v
}

/// How many instances of each identity were checked on one arc.
#[derive(Debug, Default, Clone, Copy)]
pub struct Tally {
    pub alternating: usize,
    pub cosecant_count: usize,
    pub interpolation: usize,
    pub sum_zero: usize,
    pub tangents_sign: usize,
    pub alpha_recursion: usize,
    pub alpha_equation: usize,
    pub null_vector: usize,
    pub surface_identity: usize,
    pub cosecant_zero: usize,
    pub square: usize,
}

impl Tally {
    pub fn add(&mut self, o: &Tally) {
        self.alternating += o.alternating;
        self.cosecant_count += o.cosecant_count;
        self.interpolation += o.interpolation;
        self.sum_zero += o.sum_zero;
        self.tangents_sign += o.tangents_sign;
        self.alpha_recursion += o.alpha_recursion;
        self.alpha_equation += o.alpha_equation;
        self.null_vector += o.null_vector;
        self.surface_identity += o.surface_identity;
        self.cosecant_zero += o.cosecant_zero;
        self.square += o.square;
    }
}

fn random_vec<R: Rng>(s: &ArcConfig, rng: &mut R) -> Vec<Elem> {
    let f = s.field();
    (0..s.k())
        .map(|_| f.from_int(rng.gen_range(0..f.q())).unwrap())
        .collect()
}

fn random_subset<R: Rng>(pool: &[usize], size: usize, rng: &mut R) -> Subset {
    Subset::from_unsorted(pool.choose_multiple(rng, size).copied().collect())
}

/// Checks every identity at `samples` random admissible arguments.
pub fn check_identities<R: Rng>(s: &ArcConfig, samples: usize, rng: &mut R) -> Result<Tally, String> {
    let f = s.field().clone();
    let k = s.k();
    let t = s.t();
    let all: Vec<usize> = (0..s.len()).collect();
    let mut tally = Tally::default();
    let table = alpha_table(s, s.len());
    let surface = (s.len() >= e_size(s)).then(|| build_surface(s).unwrap());

    for _ in 0..samples {
        let a = random_subset(&all, k - 2, rng);
        let rest: Vec<usize> = all.iter().copied().filter(|&i| !a.contains(i)).collect();

        let (u, v) = (random_vec(s, rng), random_vec(s, rng));
        if s.d_a(&a, &u, &v) != f.neg(s.d_a(&a, &v, &u)) || !s.d_a(&a, &u, &u).is_zero() {
            return Err(format!("d_A not alternating for A = {a:?}"));
        }
        tally.alternating += 1;

        let fa = tangent_fn(s, &a);
        if fa.degree() != t {
            return Err(format!("{} co-secants through {a:?}, expected {t}", fa.degree()));
        }
        tally.cosecant_count += 1;

        if rest.len() > t {
            let e = Subset::from_unsorted(
                a.iter()
                    .copied()
                    .chain(random_subset(&rest, t + 1, rng).iter().copied())
                    .collect(),
            );
            let values: HashMap<usize, Elem> = e.minus(&a).iter().map(|&i| (i, fa.eval(&f, s.point(i)))).collect();
            let interp = interpolate_fa(s, &a, &e, &values).unwrap();
            let x = random_vec(s, rng);
            if interp.eval(s, &x) != fa.eval(&f, &x) {
                return Err(format!("interpolation differs for A = {a:?}, E = {e:?}"));
            }
            tally.interpolation += 1;
        }

        if rest.len() >= t + 2 {
            let e = Subset::from_unsorted(
                a.iter()
                    .copied()
                    .chain(random_subset(&rest, t + 2, rng).iter().copied())
                    .collect(),
            );
            if !check_sum_zero(s, &a, &e).is_zero() {
                return Err(format!("sum-zero fails for A = {a:?}, E = {e:?}"));
            }
            tally.sum_zero += 1;
            if !check_theeqn(s, &table, &e, &a).is_zero() {
                return Err(format!("α equation fails for A = {a:?}, E = {e:?}"));
            }
            tally.alpha_equation += 1;
        }

        if s.len() >= k {
            let picked = random_subset(&all, k, rng);
            let mut order = picked.to_vec();
            order.shuffle(rng);
            let (x, y, z) = (order[0], order[1], order[2]);
            let d = Subset::from_unsorted(order[3..].to_vec());
            if !check_segre_sign(s, &d, x, y, z) {
                return Err(format!(
                    "lemma of tangents fails for D = {d:?}, x = {x}, y = {y}, z = {z}"
                ));
            }
            tally.tangents_sign += 1;
        }

        let e = *rest.choose(rng).unwrap();
        if !check_atoc(s, &table, &a, e) {
            return Err(format!("α recursion fails for A = {a:?}, e = {e}"));
        }
        tally.alpha_recursion += 1;

        if let Some(surface) = &surface {
            let out = tangent_identity_check(surface, &a);
            if !out.holds() {
                return Err(format!(
                    "surface identity fails at {} pencil points for A = {a:?}",
                    out.mismatches
                ));
            }
            tally.surface_identity += 1;
            let (checked, nonzero) = cosecant_zero_audit(surface, &a);
            if nonzero > 0 {
                return Err(format!("{nonzero} of {checked} co-secants through {a:?} are not zeros"));
            }
            tally.cosecant_zero += 1;
            if let Some(sq) = restriction_is_square(surface, &a) {
                if !sq {
                    return Err(format!("restriction to the dual line of {a:?} is not a square"));
                }
                tally.square += 1;
            }
        }
    }

    // v_G · M_n = 0 for prefixes G with n = |G| - k - t in 0..=2
    for n in 0..=2 {
        let g = k + t + n;
        if g > s.len() || (t == 0 && n == 0 && g < k) {
            continue;
        }
        if !v_g_check(s, g, n).map_err(|e| e.to_string())? {
            return Err(format!("v_G M_{n} != 0 for |G| = {g}"));
        }
        tally.null_vector += 1;
    }
    Ok(tally)
}

pub const SMALL_FIELDS: [(u32, u32); 8] = [(11, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (13, 1)];

/// A random `rows × cols` matrix of rank at most `rank`, with some entries
/// zeroed so that sparse column spaces (and hence low-weight vectors) occur.
pub fn random_matrix(f: &Arc<GaloisField>, rows: usize, cols: usize, rank: usize, rng: &mut ChaCha8Rng) -> GfMatrix {
    let rand_elem = |rng: &mut ChaCha8Rng| f.from_int(rng.gen_range(0..f.q())).unwrap();
    let sparse = |rng: &mut ChaCha8Rng| if rng.gen_bool(0.5) { Elem::ZERO } else { rand_elem(rng) };
    let left: Vec<Vec<Elem>> = (0..rows).map(|_| (0..rank).map(|_| sparse(rng)).collect()).collect();
    let right: Vec<Vec<Elem>> = (0..rank).map(|_| (0..cols).map(|_| rand_elem(rng)).collect()).collect();
    let data: Vec<Vec<Elem>> = left
        .iter()
        .map(|l| {
            (0..cols)
                .map(|j| f.sum((0..rank).map(|r| f.mul(l[r], right[r][j]))))
                .collect()
        })
        .collect();
    GfMatrix::from_rows(f.clone(), &data).unwrap()
}

pub fn oracle_weight_one(m: &GfMatrix) -> Vec<usize> {
    (0..m.rows()).filter(|&i| in_colspace(m, &unit(m.rows(), i))).collect()
}

pub fn oracle_weight_two(m: &GfMatrix, c1: usize, c2: usize) -> bool {
    let f = m.field();
    f.nonzero_elements().any(|lam| {
        let mut b = unit(m.rows(), c1);
        b[c2] = lam;
        in_colspace(m, &b)
    })
}

/// Compares both column-space tests with the oracles on every row pair.
pub fn check_weights(m: &GfMatrix) -> Result<(), String> {
    let f = m.field();
    let ones = oracle_weight_one(m);
    match weight_one_in_colspace(m) {
        Some(i) if !ones.contains(&i) => return Err(format!("claimed e_{i} in column space")),
        None if !ones.is_empty() => return Err(format!("missed weight-one rows {ones:?}")),
        _ => {}
    }
    for c1 in 0..m.rows() {
        for c2 in 0..m.rows() {
            if c1 == c2 {
                continue;
            }
            let expected = oracle_weight_two(m, c1, c2);
            match weight_two_in_colspace(m, c1, c2) {
                Some((a, b)) => {
                    if a.is_zero() || b.is_zero() {
                        return Err("weight-two coefficients must be nonzero".into());
                    }
                    let mut v = vec![Elem::ZERO; m.rows()];
                    v[c1] = a;
                    v[c2] = f.add(v[c2], b);
                    if !expected || !in_colspace(m, &v) {
                        return Err(format!("bad weight-two witness for ({c1}, {c2})"));
                    }
                }
                None if expected => return Err(format!("missed weight-two pair ({c1}, {c2})")),
                None => {}
            }
        }
    }
    Ok(())
}
