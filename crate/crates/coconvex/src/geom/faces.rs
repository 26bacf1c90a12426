//! Face lattice enumeration by closing facet vertex sets under intersection.

use std::collections::BTreeSet;

use crate::linalg;
use crate::scalar::Scalar;

use super::hull::convex_hull;
use super::point::Point;
use super::polytope::Polytope;

/// A face, referenced by (sorted) indices into the parent's vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertex_ids: Vec<usize>,
    pub dim: usize,
}

fn affine_rank(pts: &[&Point]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let rows: Vec<Vec<Scalar>> = pts[1..]
        .iter()
        .map(|p| p.sub(pts[0]).coords().to_vec())
        .collect();
    linalg::rank(&rows)
}

/// Every nonempty face of `p`, each listed once with its dimension,
/// including `p` itself and all vertices. Sorted by (dim, vertex ids).
pub fn faces(p: &Polytope) -> Vec<Face> {
    let verts = p.vertices();
    let all: Vec<usize> = (0..verts.len()).collect();
    let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    sets.insert(all);
    for f in p.facets() {
        let active: Vec<usize> = (0..verts.len())
            .filter(|&i| f.on_boundary(&verts[i]))
            .collect();
        if !active.is_empty() {
            sets.insert(active);
        }
    }
    // close under pairwise intersection
    loop {
        let snapshot: Vec<Vec<usize>> = sets.iter().cloned().collect();
        let mut grew = false;
        for i in 0..snapshot.len() {
            for j in i + 1..snapshot.len() {
                let inter: Vec<usize> = snapshot[i]
                    .iter()
                    .filter(|x| snapshot[j].binary_search(x).is_ok())
                    .cloned()
                    .collect();
                if !inter.is_empty() && sets.insert(inter) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut out: Vec<Face> = sets
        .into_iter()
        .map(|ids| {
            let pts: Vec<&Point> = ids.iter().map(|&i| &verts[i]).collect();
            Face { dim: affine_rank(&pts), vertex_ids: ids }
        })
        .collect();
    out.sort_by(|a, b| (a.dim, &a.vertex_ids).cmp(&(b.dim, &b.vertex_ids)));
    out
}

/// The face as a polytope of its own.
pub fn face_polytope(p: &Polytope, f: &Face) -> Polytope {
    let pts: Vec<Point> = f.vertex_ids.iter().map(|&i| p.vertices()[i].clone()).collect();
    convex_hull(p.dim(), &pts).expect("face of a valid polytope")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hull(dim: usize, pts: &[&[i64]]) -> Polytope {
        let v: Vec<Point> = pts.iter().map(|c| Point::from_ints(c)).collect();
        convex_hull(dim, &v).unwrap()
    }

    #[test]
    fn segment_faces() {
        let s = hull(1, &[&[0], &[2]]);
        let fs = faces(&s);
        assert_eq!(fs.len(), 3); // 2 vertices + the segment
        assert_eq!(fs.iter().filter(|f| f.dim == 0).count(), 2);
        assert_eq!(fs.iter().filter(|f| f.dim == 1).count(), 1);
    }

    #[test]
    fn square_faces() {
        let s = hull(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let fs = faces(&s);
        assert_eq!(fs.len(), 9); // 4 + 4 + 1
    }

    #[test]
    fn cube_faces() {
        let s = hull(
            3,
            &[
                &[0, 0, 0],
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 1, 1],
                &[1, 1, 1],
            ],
        );
        let fs = faces(&s);
        assert_eq!(fs.iter().filter(|f| f.dim == 0).count(), 8);
        assert_eq!(fs.iter().filter(|f| f.dim == 1).count(), 12);
        assert_eq!(fs.iter().filter(|f| f.dim == 2).count(), 6);
        assert_eq!(fs.iter().filter(|f| f.dim == 3).count(), 1);
        assert_eq!(fs.len(), 27);
    }

    #[test]
    fn single_point_faces() {
        let s = hull(2, &[&[5, 7]]);
        let fs = faces(&s);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].dim, 0);
    }
}
