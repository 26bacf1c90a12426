//! File formats: polytopes, bodies, families, wedge families and chain
//! dumps. All numbers travel as rational strings like `"3/2"`; floats are
//! rejected at the type level (numeric JSON literals do not deserialize
//! into the string fields) and at the literal level (`"1.5"` fails the
//! rational parser). Serialization uses canonical in-memory data, so
//! parse ∘ serialize is the identity.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::body::{make_body, CoconvexBody};
use crate::chains::ConvexChain;
use crate::error::{Error, Result};
use crate::geom::{convex_hull, HalfSpace, Point, Polytope};
use crate::mixed::{LinearFamilyConvex, LinearFamilyCoconvex};
use crate::polygon2d::WedgeFamily;
use crate::scalar::{format_rational, parse_rational, Scalar};

fn parse_vec(strings: &[String]) -> Result<Vec<Scalar>> {
    strings.iter().map(|s| parse_rational(s)).collect()
}

fn parse_point(strings: &[String]) -> Result<Point> {
    if strings.is_empty() {
        return Err(Error::Parse("empty coordinate tuple".into()));
    }
    Ok(Point::new(parse_vec(strings)?))
}

fn render_point(p: &Point) -> Vec<String> {
    p.coords().iter().map(format_rational).collect()
}

fn render_vec(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn json_err(context: &str, e: serde_json::Error) -> Error {
    Error::Parse(format!("{context}: {e}"))
}

// --- polytope files --------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct HalfSpaceFile {
    pub normal: Vec<String>,
    pub offset: String,
}

#[derive(Serialize, Deserialize)]
pub struct PolytopeFile {
    pub dim: usize,
    pub vertices: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub halfspaces: Option<Vec<HalfSpaceFile>>,
}

pub fn parse_polytope_str(s: &str) -> Result<Polytope> {
    let f: PolytopeFile =
        serde_json::from_str(s).map_err(|e| json_err("polytope file", e))?;
    let vertices: Vec<Point> = f
        .vertices
        .iter()
        .map(|v| {
            let p = parse_point(v)?;
            if p.dim() != f.dim {
                return Err(Error::Parse(format!(
                    "vertex arity {} does not match dim {}",
                    p.dim(),
                    f.dim
                )));
            }
            Ok(p)
        })
        .collect::<Result<_>>()?;
    let poly = convex_hull(f.dim, &vertices)?;
    if let Some(hs) = &f.halfspaces {
        let mut given: Vec<HalfSpace> = hs
            .iter()
            .map(|h| {
                let normal = parse_vec(&h.normal)?;
                if normal.iter().all(num_traits::Zero::is_zero) {
                    return Err(Error::Parse("zero half-space normal".into()));
                }
                Ok(HalfSpace::closed(normal, parse_rational(&h.offset)?).canonical())
            })
            .collect::<Result<_>>()?;
        given.sort();
        given.dedup();
        if given != poly.facets() {
            return Err(Error::Parse(
                "halfspaces in the file disagree with the hull of the vertices".into(),
            ));
        }
    }
    Ok(poly)
}

pub fn serialize_polytope(p: &Polytope) -> String {
    let f = PolytopeFile {
        dim: p.dim(),
        vertices: p.vertices().iter().map(render_point).collect(),
        halfspaces: Some(
            p.facets()
                .iter()
                .map(|h| HalfSpaceFile {
                    normal: render_vec(&h.normal),
                    offset: format_rational(&h.offset),
                })
                .collect(),
        ),
    };
    serde_json::to_string_pretty(&f).expect("polytope serialization")
}

// --- body files -------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct ConeSection {
    pub generators: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
pub struct DeltaSection {
    #[serde(rename = "basePoints")]
    pub base_points: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
pub struct BodyFile {
    pub cone: ConeSection,
    pub delta: DeltaSection,
    pub xi: Vec<String>,
}

pub fn parse_body_str(s: &str) -> Result<CoconvexBody> {
    let f: BodyFile = serde_json::from_str(s).map_err(|e| json_err("body file", e))?;
    let gens: Vec<Point> = f
        .cone
        .generators
        .iter()
        .map(|v| parse_point(v))
        .collect::<Result<_>>()?;
    let base: Vec<Point> = f
        .delta
        .base_points
        .iter()
        .map(|v| parse_point(v))
        .collect::<Result<_>>()?;
    let xi = parse_vec(&f.xi)?;
    make_body(&gens, &base, &xi)
}

pub fn serialize_body(b: &CoconvexBody) -> String {
    let f = BodyFile {
        cone: ConeSection {
            generators: b.cone().rays().iter().map(render_point).collect(),
        },
        delta: DeltaSection {
            base_points: b.delta().base_points().iter().map(render_point).collect(),
        },
        xi: render_vec(b.xi()),
    };
    serde_json::to_string_pretty(&f).expect("body serialization")
}

pub fn read_body(path: &Path) -> Result<CoconvexBody> {
    parse_body_str(&std::fs::read_to_string(path)?)
}

pub fn read_polytope(path: &Path) -> Result<Polytope> {
    parse_polytope_str(&std::fs::read_to_string(path)?)
}

// --- family files -----------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct FamilyFile {
    /// `"coconvex"` (body files) or `"convex"` (polytope files).
    pub kind: String,
    /// Paths to member files, relative to the family file.
    pub bodies: Vec<String>,
    #[serde(rename = "markedPoints", default, skip_serializing_if = "Vec::is_empty")]
    pub marked_points: Vec<Vec<String>>,
}

pub enum ParsedFamily {
    Coconvex(LinearFamilyCoconvex),
    Convex(LinearFamilyConvex),
}

pub fn parse_family_file(path: &Path) -> Result<ParsedFamily> {
    let s = std::fs::read_to_string(path)?;
    let f: FamilyFile = serde_json::from_str(&s).map_err(|e| json_err("family file", e))?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
    let marked: Vec<Vec<Scalar>> = f
        .marked_points
        .iter()
        .map(|v| parse_vec(v))
        .collect::<Result<_>>()?;
    match f.kind.as_str() {
        "coconvex" => {
            let bodies: Vec<CoconvexBody> = f
                .bodies
                .iter()
                .map(|rel| read_body(&dir.join(rel)))
                .collect::<Result<_>>()?;
            Ok(ParsedFamily::Coconvex(LinearFamilyCoconvex::new(bodies, marked)?))
        }
        "convex" => {
            let basis: Vec<Polytope> = f
                .bodies
                .iter()
                .map(|rel| read_polytope(&dir.join(rel)))
                .collect::<Result<_>>()?;
            Ok(ParsedFamily::Convex(LinearFamilyConvex::new(basis, marked)?))
        }
        other => Err(Error::Parse(format!(
            "unknown family kind {other:?}: expected \"coconvex\" or \"convex\""
        ))),
    }
}

/// Structural validation of a family file without touching the referenced
/// member files: JSON shape, kind tag, rational marked points.
pub fn validate_family_header(s: &str) -> Result<()> {
    let f: FamilyFile = serde_json::from_str(s).map_err(|e| json_err("family file", e))?;
    if f.kind != "coconvex" && f.kind != "convex" {
        return Err(Error::Parse(format!("unknown family kind {:?}", f.kind)));
    }
    if f.bodies.is_empty() {
        return Err(Error::Parse("family lists no member files".into()));
    }
    for v in &f.marked_points {
        parse_vec(v)?;
    }
    Ok(())
}

/// Structural validation of a chain index file without reading the term
/// polytope files.
pub fn validate_chain_header(s: &str) -> Result<()> {
    let f: ChainFile = serde_json::from_str(s).map_err(|e| json_err("chain file", e))?;
    for t in &f.terms {
        t.coeff
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad chain coefficient {:?}", t.coeff)))?;
    }
    Ok(())
}

// --- wedge family files -----------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct WedgeFamilyFile {
    pub wedge: Vec<String>,
    pub normals: Vec<Vec<String>>,
}

pub fn parse_wedge_str(s: &str) -> Result<WedgeFamily> {
    let f: WedgeFamilyFile =
        serde_json::from_str(s).map_err(|e| json_err("wedge family file", e))?;
    let wedge = parse_point(&f.wedge)?;
    let normals: Vec<Point> = f
        .normals
        .iter()
        .map(|v| parse_point(v))
        .collect::<Result<_>>()?;
    WedgeFamily::new(wedge, normals)
}

pub fn serialize_wedge(f: &WedgeFamily) -> String {
    let file = WedgeFamilyFile {
        wedge: render_point(f.wedge_generator()),
        normals: f.normals().iter().map(render_point).collect(),
    };
    serde_json::to_string_pretty(&file).expect("wedge serialization")
}

// --- chain dumps ------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct ChainTermFile {
    pub coeff: String,
    pub polytope: String,
}

#[derive(Serialize, Deserialize)]
pub struct ChainFile {
    pub dim: usize,
    pub terms: Vec<ChainTermFile>,
}

/// Writes a chain as an index file plus one polytope file per term under
/// `dir`; returns the index path.
pub fn write_chain_dump(chain: &ConvexChain, dir: &Path, name: &str) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let mut terms = Vec::new();
    for (i, (c, p)) in chain.terms().iter().enumerate() {
        let rel = format!("{name}-term{i}.polytope");
        std::fs::write(dir.join(&rel), serialize_polytope(p))?;
        terms.push(ChainTermFile { coeff: c.to_string(), polytope: rel });
    }
    let index = dir.join(format!("{name}.chain"));
    let file = ChainFile { dim: chain.dim(), terms };
    std::fs::write(&index, serde_json::to_string_pretty(&file).expect("chain serialization"))?;
    Ok(index)
}

pub fn read_chain_dump(path: &Path) -> Result<ConvexChain> {
    let s = std::fs::read_to_string(path)?;
    let f: ChainFile = serde_json::from_str(&s).map_err(|e| json_err("chain file", e))?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
    let mut terms = Vec::new();
    for t in &f.terms {
        let c: i64 = t
            .coeff
            .parse()
            .map_err(|_| Error::Parse(format!("bad chain coefficient {:?}", t.coeff)))?;
        terms.push((c, read_polytope(&dir.join(&t.polytope))?));
    }
    ConvexChain::from_terms(f.dim, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn staircase_body() -> CoconvexBody {
        make_body(
            &[Point::from_ints(&[1, 0]), Point::from_ints(&[0, 1])],
            &[Point::from_ints(&[2, 0]), Point::from_ints(&[0, 2])],
            &[int(1), int(1)],
        )
        .unwrap()
    }

    #[test]
    fn body_round_trip() {
        let b = staircase_body();
        let s = serialize_body(&b);
        let b2 = parse_body_str(&s).unwrap();
        assert_eq!(b, b2);
    }

    #[test]
    fn polytope_round_trip_with_halfspaces() {
        let (dt, _) = staircase_body().truncate(&int(4)).unwrap();
        let s = serialize_polytope(&dt);
        let p2 = parse_polytope_str(&s).unwrap();
        assert_eq!(dt, p2);
    }

    #[test]
    fn rejects_float_literals() {
        let s = r#"{"dim":1,"vertices":[["1.5"],["2"]]}"#;
        assert!(matches!(parse_polytope_str(s), Err(Error::Parse(_))));
        // a bare JSON number is a type error, also rejected
        let s = r#"{"dim":1,"vertices":[[1.5],[2]]}"#;
        assert!(matches!(parse_polytope_str(s), Err(Error::Parse(_))));
    }

    #[test]
    fn rejects_zero_generator() {
        let s = r#"{"cone":{"generators":[["0","0"],["0","1"]]},
                    "delta":{"basePoints":[["1","0"]]},"xi":["1","1"]}"#;
        assert!(matches!(parse_body_str(s), Err(Error::Validation(_))));
    }

    #[test]
    fn rejects_mismatched_halfspaces() {
        let s = r#"{"dim":1,"vertices":[["0"],["2"]],
                    "halfspaces":[{"normal":["1"],"offset":"1"}]}"#;
        assert!(matches!(parse_polytope_str(s), Err(Error::Parse(_))));
    }

    #[test]
    fn wedge_round_trip() {
        let fam = WedgeFamily::new(
            Point::from_ints(&[0, 1]),
            vec![Point::from_ints(&[1, 2]), Point::from_ints(&[1, 1])],
        )
        .unwrap();
        let s = serialize_wedge(&fam);
        let f2 = parse_wedge_str(&s).unwrap();
        assert_eq!(f2.wedge_generator(), fam.wedge_generator());
        assert_eq!(f2.normals(), fam.normals());
    }

    #[test]
    fn chain_dump_round_trip() {
        let b = staircase_body();
        let chain = crate::chains::coconvex_chain(&b).unwrap();
        let dir = std::env::temp_dir().join("coconvex-io-test");
        let index = write_chain_dump(&chain, &dir, "stair").unwrap();
        let back = read_chain_dump(&index).unwrap();
        assert_eq!(chain, back);
    }
}
