//! Generators for the extremal and near-extremal families: stars (all
//! k-sets through a fixed t-set), sunflowers with a fixed core, and the
//! lines of the projective plane PG(2, q).

use thiserror::Error;

use crate::error::CoreError;
use crate::family::{BlockSet, Family, GroundSet};
use crate::gf::{GfContext, GfError};
use crate::util::for_each_combination;

/// Largest supported projective plane order; keeps n = q^2+q+1 <= 273 and
/// still covers the extension-field orders 4, 8, 9 and 16.
pub const MAX_PLANE_ORDER: u32 = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("t must satisfy 0 < t < k (t = {t}, k = {k})")]
    TOutOfRange { t: u32, k: u32 },
    #[error("k must satisfy 0 < k <= n (k = {k}, n = {n})")]
    KOutOfRange { k: u32, n: u32 },
    #[error("lambda must satisfy 0 < lambda < k (lambda = {lambda}, k = {k})")]
    LambdaOutOfRange { lambda: u32, k: u32 },
    #[error("capacity exceeded: {requested} petals need {needed} elements but only {available} are free; maximum feasible m = {max_feasible}")]
    CapacityExceeded {
        requested: u32,
        needed: u64,
        available: u64,
        max_feasible: u64,
    },
    #[error(transparent)]
    NotPrimePower(#[from] GfError),
    #[error("plane order {q} exceeds the supported maximum {max}")]
    UnsupportedOrder { q: u32, max: u32 },
    #[error("incidence invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// All k-subsets of [n] containing {1, ..., t}; size C(n-t, k-t), kernel
/// [t], and {t, ..., k-1}-intersecting.
pub fn star(n: u32, k: u32, t: u32) -> Result<Family, ConstructError> {
    if t == 0 || t >= k {
        return Err(ConstructError::TOutOfRange { t, k });
    }
    if k > n {
        return Err(ConstructError::KOutOfRange { k, n });
    }
    let ground = GroundSet::new(n)?;
    let free: Vec<u32> = (t + 1..=n).collect();
    let mut blocks = Vec::new();
    for_each_combination(&free, (k - t) as usize, &mut |petal| {
        let block = BlockSet::from_elements(ground, (1..=t).chain(petal.iter().copied()))
            .expect("elements in range by construction");
        blocks.push(block);
        true
    });
    Ok(Family::from_blocks_unchecked(ground, blocks))
}

/// `m` blocks sharing the core {1, ..., lambda}, with pairwise-disjoint
/// petals of size k - lambda packed greedily after the core.
pub fn sunflower(n: u32, k: u32, lambda: u32, m: u32) -> Result<Family, ConstructError> {
    if lambda == 0 || lambda >= k {
        return Err(ConstructError::LambdaOutOfRange { lambda, k });
    }
    if k > n {
        return Err(ConstructError::KOutOfRange { k, n });
    }
    let petal = (k - lambda) as u64;
    let available = (n - lambda) as u64;
    let needed = m as u64 * petal;
    if needed > available {
        return Err(ConstructError::CapacityExceeded {
            requested: m,
            needed,
            available,
            max_feasible: available / petal,
        });
    }
    let ground = GroundSet::new(n)?;
    let mut blocks = Vec::with_capacity(m as usize);
    for i in 0..m {
        let start = lambda + 1 + i * (k - lambda);
        let block =
            BlockSet::from_elements(ground, (1..=lambda).chain(start..start + (k - lambda)))
                .expect("capacity checked above");
        blocks.push(block);
    }
    Ok(Family::from_blocks_unchecked(ground, blocks))
}

/// The projective plane PG(2, q): q^2+q+1 points and lines, lines of size
/// q+1, any two lines meeting in exactly one point.
#[derive(Debug, Clone)]
pub struct ProjectivePlane {
    q: u32,
    points: Vec<[u32; 3]>,
    lines: Family,
}

impl ProjectivePlane {
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Number of points (and lines), q^2 + q + 1.
    pub fn n(&self) -> u32 {
        self.q * self.q + self.q + 1
    }

    /// Points per line (and lines per point), q + 1.
    pub fn line_size(&self) -> u32 {
        self.q + 1
    }

    /// Normalized homogeneous coordinates of point `i+1`.
    pub fn points(&self) -> &[[u32; 3]] {
        &self.points
    }

    pub fn lines(&self) -> &Family {
        &self.lines
    }

    pub fn into_lines(self) -> Family {
        self.lines
    }

    /// All incidences as 1-based (point, line) pairs, sorted.
    pub fn incidence_pairs(&self) -> Vec<(u32, u32)> {
        let mut pairs = Vec::new();
        for (li, line) in self.lines.iter().enumerate() {
            for point in line.iter() {
                pairs.push((point, li as u32 + 1));
            }
        }
        pairs.sort_unstable();
        pairs
    }

    /// Verifies all incidence invariants: counts, line size, pairwise line
    /// intersections, point degrees, and uniqueness of the line through two
    /// points.
    pub fn check_invariants(&self) -> Result<(), ConstructError> {
        let n = self.n() as usize;
        let k = self.line_size();
        let fail = |msg: String| Err(ConstructError::Invariant(msg));

        if self.points.len() != n {
            return fail(format!("expected {n} points, found {}", self.points.len()));
        }
        if self.lines.len() != n {
            return fail(format!("expected {n} lines, found {}", self.lines.len()));
        }
        for (i, line) in self.lines.iter().enumerate() {
            if line.len() != k {
                return fail(format!(
                    "line {} has {} points, expected {k}",
                    i + 1,
                    line.len()
                ));
            }
        }
        for i in 0..self.lines.len() {
            for j in i + 1..self.lines.len() {
                let meet = self
                    .lines
                    .get(i)
                    .unwrap()
                    .intersection_size(self.lines.get(j).unwrap());
                if meet != 1 {
                    return fail(format!(
                        "lines {} and {} meet in {meet} points",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
        let mut degree = vec![0u32; n + 1];
        for line in self.lines.iter() {
            for point in line.iter() {
                degree[point as usize] += 1;
            }
        }
        for point in 1..=n as u32 {
            if degree[point as usize] != k {
                return fail(format!(
                    "point {point} lies on {} lines, expected {k}",
                    degree[point as usize]
                ));
            }
        }
        for a in 1..=n as u32 {
            for b in a + 1..=n as u32 {
                let through = self
                    .lines
                    .iter()
                    .filter(|line| line.contains(a) && line.contains(b))
                    .count();
                if through != 1 {
                    return fail(format!("points {a} and {b} lie on {through} common lines"));
                }
            }
        }
        Ok(())
    }
}

/// Builds PG(2, q) over GF(q) with points labeled 1..q^2+q+1.
///
/// Points are the projective triples (x:y:z) normalized so the first
/// nonzero coordinate is 1, enumerated in lexicographic order; the same
/// list indexes the lines, line (a:b:c) consisting of the points with
/// ax + by + cz = 0. The construction verifies every incidence invariant
/// before returning.
pub fn projective_plane(q: u32) -> Result<ProjectivePlane, ConstructError> {
    let field = GfContext::new(q)?;
    if q > MAX_PLANE_ORDER {
        return Err(ConstructError::UnsupportedOrder {
            q,
            max: MAX_PLANE_ORDER,
        });
    }

    let mut points: Vec<[u32; 3]> = Vec::with_capacity((q * q + q + 1) as usize);
    points.push([0, 0, 1]);
    for z in 0..q {
        points.push([0, 1, z]);
    }
    for y in 0..q {
        for z in 0..q {
            points.push([1, y, z]);
        }
    }

    let n = q * q + q + 1;
    let ground = GroundSet::new(n)?;
    let mut blocks = Vec::with_capacity(n as usize);
    for coeffs in &points {
        let mut line = BlockSet::empty(ground);
        for (idx, p) in points.iter().enumerate() {
            let dot = field.add(
                field.add(field.mul(coeffs[0], p[0]), field.mul(coeffs[1], p[1])),
                field.mul(coeffs[2], p[2]),
            );
            if dot == 0 {
                line.insert(idx as u32 + 1)?;
            }
        }
        blocks.push(line);
    }
    let plane = ProjectivePlane {
        q,
        points,
        lines: Family::from_blocks(ground, blocks)?,
    };
    plane.check_invariants()?;
    Ok(plane)
}
