//! Seeded, deterministic generators of random bodies, families, polytopes
//! and wedge data for the verification suites. Every draw is a pure
//! function of the seed.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::body::{make_body, CoconvexBody};
use crate::error::Result;
use crate::genfun::IntegerCone;
use crate::geom::{convex_hull, Point, Polytope};
use crate::mixed::{LinearFamilyConvex, LinearFamilyCoconvex};
use crate::polygon2d::WedgeFamily;
use crate::scalar::{frac, int, Scalar};

pub type SampleRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Cone pool per dimension: generator sets paired with a functional that is
/// strictly positive on them.
fn cone_pool(dim: usize) -> Vec<(Vec<Vec<i64>>, Vec<i64>)> {
    match dim {
        1 => vec![(vec![vec![1]], vec![1])],
        2 => vec![
            (vec![vec![1, 0], vec![0, 1]], vec![1, 1]),
            (vec![vec![1, 0], vec![1, 2]], vec![1, 1]),
            (vec![vec![1, 0], vec![2, 3]], vec![1, 1]),
            (vec![vec![1, 1], vec![-1, 2]], vec![1, 2]),
        ],
        3 => vec![
            (
                vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
                vec![1, 1, 1],
            ),
            (
                vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 2]],
                vec![1, 1, 1],
            ),
            (
                // cone over a unit square at height one
                vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]],
                vec![0, 0, 1],
            ),
        ],
        _ => panic!("cone pool covers dimensions 1 to 3"),
    }
}

pub struct SampledCone {
    pub generators: Vec<Point>,
    pub xi: Vec<Scalar>,
}

pub fn sample_cone(dim: usize, rng: &mut SampleRng) -> SampledCone {
    let pool = cone_pool(dim);
    let (gens, xi) = pool[rng.random_range(0..pool.len())].clone();
    SampledCone {
        generators: gens.iter().map(|g| Point::from_ints(g)).collect(),
        xi: xi.iter().map(|&x| int(x)).collect(),
    }
}

/// A valid integer body over the given cone: an integer multiple of every
/// extreme ray (which bounds the complement) plus a few interior points.
pub fn sample_body_on(cone: &SampledCone, rng: &mut SampleRng) -> Result<CoconvexBody> {
    let mut base: Vec<Point> = Vec::new();
    for g in &cone.generators {
        let m = int(rng.random_range(1..=4));
        base.push(g.scale(&m));
    }
    for _ in 0..rng.random_range(0..=2) {
        let mut p = Point::zero(cone.generators[0].dim());
        for g in &cone.generators {
            let c = int(rng.random_range(0..=2));
            p = p.add(&g.scale(&c));
        }
        if !p.is_zero() {
            base.push(p);
        }
    }
    make_body(&cone.generators, &base, &cone.xi)
}

pub fn sample_body(dim: usize, rng: &mut SampleRng) -> Result<CoconvexBody> {
    let cone = sample_cone(dim, rng);
    sample_body_on(&cone, rng)
}

/// A pair of integer bodies over a shared cone and functional.
pub fn sample_body_pair(dim: usize, rng: &mut SampleRng) -> Result<(CoconvexBody, CoconvexBody)> {
    let cone = sample_cone(dim, rng);
    Ok((sample_body_on(&cone, rng)?, sample_body_on(&cone, rng)?))
}

fn sample_marked(n: usize, count: usize, rng: &mut SampleRng) -> Vec<Vec<Scalar>> {
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| frac(rng.random_range(1..=3), rng.random_range(1..=2)))
                .collect()
        })
        .collect()
}

/// A coconvex family of `n` bodies over a shared cone with `d-2` marked
/// points.
pub fn sample_coconvex_family(
    dim: usize,
    n: usize,
    rng: &mut SampleRng,
) -> Result<LinearFamilyCoconvex> {
    let cone = sample_cone(dim, rng);
    let bodies: Vec<CoconvexBody> = (0..n)
        .map(|_| sample_body_on(&cone, rng))
        .collect::<Result<_>>()?;
    let marked = sample_marked(n, dim.saturating_sub(2), rng);
    LinearFamilyCoconvex::new(bodies, marked)
}

/// A random integer polytope with at most `max_points` spanning points.
pub fn sample_integer_polytope(
    dim: usize,
    max_points: usize,
    rng: &mut SampleRng,
) -> Result<Polytope> {
    loop {
        let k = rng.random_range(dim + 1..=max_points);
        let pts: Vec<Point> = (0..k)
            .map(|_| {
                Point::from_ints(
                    &(0..dim)
                        .map(|_| rng.random_range(-3..=4))
                        .collect::<Vec<i64>>(),
                )
            })
            .collect();
        let hull = convex_hull(dim, &pts)?;
        if hull.is_full_dimensional() {
            return Ok(hull);
        }
    }
}

/// A convex family guaranteed to contain a full-dimensional body.
pub fn sample_convex_family(
    dim: usize,
    n: usize,
    rng: &mut SampleRng,
) -> Result<LinearFamilyConvex> {
    let mut basis = vec![sample_integer_polytope(dim, dim + 4, rng)?];
    for _ in 1..n {
        // mix in lower-dimensional members occasionally
        if rng.random_range(0..4) == 0 {
            let a = Point::from_ints(
                &(0..dim).map(|_| rng.random_range(0..=3)).collect::<Vec<i64>>(),
            );
            let mut step = vec![0i64; dim];
            step[rng.random_range(0..dim)] = rng.random_range(1..=2);
            let b = a.add(&Point::from_ints(&step));
            basis.push(convex_hull(dim, &[a, b])?);
        } else {
            basis.push(sample_integer_polytope(dim, dim + 3, rng)?);
        }
    }
    let marked = sample_marked(n, dim.saturating_sub(2), rng);
    LinearFamilyConvex::new(basis, marked)
}

/// A pointed integer cone from the tangent data of a sampled polytope, with
/// a functional strictly positive on its generators.
pub fn sample_pointed_cone_with_functional(
    dim: usize,
    rng: &mut SampleRng,
) -> Result<(IntegerCone, Vec<Scalar>)> {
    let p = sample_integer_polytope(dim, dim + 3, rng)?;
    let v = &p.vertices()[rng.random_range(0..p.vertices().len())];
    let tc = crate::genfun::tangent_cone(&p, v)?;
    let phi = positive_functional(&tc.cone)
        .expect("a pointed cone admits a strictly positive functional");
    Ok((tc.cone, phi))
}

/// A functional strictly positive on every generator: the sum of the
/// cone's facet normals. A generator on every facet would lie in the
/// lineality space, which pointedness rules out, so the sum is strict.
pub fn positive_functional(cone: &IntegerCone) -> Option<Vec<Scalar>> {
    let dim = cone.dim();
    if cone.generators().is_empty() {
        return Some(vec![int(1); dim]);
    }
    let geom = crate::genfun::cones::cone_geometry(cone).ok()?;
    let mut phi = vec![Scalar::zero(); dim];
    for n in &geom.facet_normals {
        for (p, x) in phi.iter_mut().zip(n) {
            *p += x;
        }
    }
    let strict = cone.generators().iter().all(|g| {
        g.iter()
            .zip(&phi)
            .map(|(&a, b)| int(a) * b)
            .fold(Scalar::zero(), |acc, t| acc + t)
            .is_positive()
    });
    strict.then_some(phi)
}

/// A wedge family with `n` edges: normals drawn with positive coordinates,
/// positive pairing with the wedge generator, sorted into increasing
/// edge-angle order.
pub fn sample_wedge_family(n: usize, rng: &mut SampleRng) -> Result<WedgeFamily> {
    let wedges = [vec![0i64, 1], vec![1, 1], vec![-1, 2], vec![1, 3]];
    'outer: loop {
        let w = Point::from_ints(&wedges[rng.random_range(0..wedges.len())]);
        let mut normals: Vec<Point> = Vec::new();
        for _ in 0..60 {
            if normals.len() == n {
                break;
            }
            let u = vec![rng.random_range(1..=5i64), rng.random_range(1..=5i64)];
            let g = num_integer::gcd(u[0], u[1]);
            let u = Point::from_ints(&[u[0] / g, u[1] / g]);
            if !u.dot(w.coords()).is_positive() {
                continue;
            }
            if normals
                .iter()
                .any(|v| v.coord(0) * u.coord(1) == v.coord(1) * u.coord(0))
            {
                continue;
            }
            normals.push(u);
        }
        if normals.len() < n {
            continue 'outer;
        }
        // increasing edge angle = clockwise-rotating normals:
        // u before v iff cross(u, v) < 0
        normals.sort_by(|a, b| {
            (a.coord(0) * b.coord(1)).cmp(&(a.coord(1) * b.coord(0)))
        });
        return WedgeFamily::new(w, normals);
    }
}

/// A valid support vector for a wedge family: walk random positive steps
/// along the edge directions and anchor the chain on the wedge ray.
pub fn sample_support_vector(fam: &WedgeFamily, rng: &mut SampleRng) -> Vec<Scalar> {
    let n = fam.len();
    let taus: Vec<Scalar> = (0..n)
        .map(|_| frac(rng.random_range(1..=6), rng.random_range(1..=2)))
        .collect();
    let w = fam.wedge_generator();
    let mut s = Scalar::zero();
    for (u, tau) in fam.normals().iter().zip(&taus) {
        s += u.dot(w.coords()) * tau / w.coord(1);
    }
    let mut q = Point::new(vec![s, Scalar::zero()]);
    let mut h = Vec::with_capacity(n);
    for (u, tau) in fam.normals().iter().zip(&taus) {
        h.push(u.dot(q.coords()));
        let d = Point::new(vec![-u.coord(1).clone(), u.coord(0).clone()]);
        q = q.add(&d.scale(tau));
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampled_bodies_validate() {
        let mut rng = rng_from_seed(1);
        for dim in 1..=3 {
            for _ in 0..5 {
                let b = sample_body(dim, &mut rng).unwrap();
                assert!(b.is_integer());
                assert!(num_traits::Signed::is_positive(&b.covolume().unwrap()));
            }
        }
    }

    #[test]
    fn sampled_support_vectors_are_valid() {
        let mut rng = rng_from_seed(2);
        for n in 1..=5 {
            let fam = sample_wedge_family(n, &mut rng).unwrap();
            for _ in 0..3 {
                let h = sample_support_vector(&fam, &mut rng);
                assert!(fam.chain(&h).is_ok());
            }
        }
    }

    #[test]
    fn determinism() {
        let mut a = rng_from_seed(9);
        let mut b = rng_from_seed(9);
        let fa = sample_coconvex_family(2, 3, &mut a).unwrap();
        let fb = sample_coconvex_family(2, 3, &mut b).unwrap();
        for (x, y) in fa.bodies.iter().zip(&fb.bodies) {
            assert_eq!(x, y);
        }
    }

    #[test]
    fn positive_functionals_exist_for_tangent_cones() {
        let mut rng = rng_from_seed(3);
        for dim in 2..=3 {
            for _ in 0..5 {
                let (cone, phi) = sample_pointed_cone_with_functional(dim, &mut rng).unwrap();
                for g in cone.generators() {
                    let v: Scalar = g
                        .iter()
                        .zip(&phi)
                        .map(|(&a, b)| int(a) * b)
                        .fold(Scalar::zero(), |acc, t| acc + t);
                    assert!(num_traits::Signed::is_positive(&v));
                }
            }
        }
    }
}
