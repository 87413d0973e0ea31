//! Named graphs: the split-graph families, H₉, and the two C₆* variants.

use super::{CliqueStarParams, Graph};
use crate::error::{Error, Result};

/// Edge set of H₉ on vertices `0..9`. Rotation by three is an automorphism.
const H9_EDGES: [(usize, usize); 21] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 6),
    (0, 7),
    (0, 8),
    (1, 2),
    (1, 3),
    (1, 8),
    (2, 3),
    (2, 4),
    (3, 4),
    (3, 5),
    (3, 6),
    (4, 5),
    (4, 6),
    (5, 6),
    (5, 7),
    (6, 7),
    (6, 8),
    (7, 8),
];

pub fn h9() -> Graph {
    Graph::from_edges(9, &H9_EDGES).expect("static edge list")
}

/// `K_a + E_b`: a clique on `0..a` and `b` isolated vertices.
pub fn k_a_plus_e_b(a: usize, b: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in u + 1..a {
            edges.push((u, v));
        }
    }
    Graph::from_edges(a + b, &edges)
}

/// The star on `h` vertices with center 0.
pub fn star(h: usize) -> Result<Graph> {
    if h < 2 {
        return Err(Error::InvalidParameters(format!("star needs h >= 2, got {h}")));
    }
    let edges: Vec<_> = (1..h).map(|v| (0, v)).collect();
    Graph::from_edges(h, &edges)
}

/// Double-star on `h` vertices: adjacent centers 0 and 1 owning `a1 + 1` and
/// `a2 + 1` leaves respectively.
pub fn double_star(h: usize, a1: usize, a2: usize) -> Result<Graph> {
    if h != a1 + a2 + 4 {
        return Err(Error::InvalidParameters(format!(
            "double_star({h},{a1},{a2}) needs h = a1 + a2 + 4"
        )));
    }
    clique_star(&CliqueStarParams::new(2, vec![0, a1, a2]))
}

/// Clique on `0..ω`; then the leaves of each clique vertex in turn; then the
/// `a₀` isolated vertices.
pub fn clique_star(params: &CliqueStarParams) -> Result<Graph> {
    let omega = params.omega;
    if omega < 2 || params.a.len() != omega + 1 {
        return Err(Error::InvalidParameters(format!(
            "clique-star needs omega >= 2 and omega + 1 parameters, got {params:?}"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..omega {
        for v in u + 1..omega {
            edges.push((u, v));
        }
    }
    let mut next = omega;
    for (i, &ai) in params.a[1..].iter().enumerate() {
        for _ in 0..=ai {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::from_edges(next + params.a[0], &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// C₆ plus the chord 0–2.
pub fn c6_short_diag() -> Graph {
    with_chord(0, 2)
}

/// C₆ plus the chord 0–3.
pub fn c6_long_diag() -> Graph {
    with_chord(0, 3)
}

fn with_chord(u: usize, v: usize) -> Graph {
    let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    edges.push((u, v));
    Graph::from_edges(6, &edges).expect("static edge list")
}

/// A split graph with the given independence and clique numbers: a
/// clique-star when `alpha >= omega`, otherwise the complement of one.
pub fn split_witness(alpha: usize, omega: usize) -> Result<Graph> {
    if alpha < 2 || omega < 2 {
        return Err(Error::InvalidParameters(format!(
            "split witness needs alpha, omega >= 2, got ({alpha}, {omega})"
        )));
    }
    if alpha >= omega {
        let mut a = vec![0; omega + 1];
        a[0] = alpha - omega;
        clique_star(&CliqueStarParams::new(omega, a))
    } else {
        Ok(split_witness(omega, alpha)?.complement())
    }
}

/// Resolves a preset name such as `H9`, `K3` (complete), `E3` (empty), `star(4)`, `K_a+E_b(2,1)`,
/// `double_star(6,1,1)`, `clique_star(3;0,1,0,0)`, `C6_short_diag`.
pub fn by_name(name: &str) -> Result<Graph> {
    let name = name.trim();
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "h9" => return Ok(h9()),
        "c6_short_diag" => return Ok(c6_short_diag()),
        "c6_long_diag" => return Ok(c6_long_diag()),
        _ => {}
    }
    if let Some(n) = lower.strip_prefix('k').and_then(|t| t.parse::<usize>().ok()) {
        return Graph::complete(n);
    }
    if let Some(n) = lower.strip_prefix('e').and_then(|t| t.parse::<usize>().ok()) {
        return Graph::empty(n);
    }
    let unknown = || Error::UnknownPreset(name.to_string());
    let (head, args) = lower
        .strip_suffix(')')
        .and_then(|s| s.split_once('('))
        .ok_or_else(unknown)?;
    let nums = |s: &str| -> Result<Vec<usize>> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameters(format!("bad number `{t}` in `{name}`")))
            })
            .collect()
    };
    let arity = |v: &[usize], k: usize| -> Result<()> {
        if v.len() == k {
            Ok(())
        } else {
            Err(Error::InvalidParameters(format!("`{name}` expects {k} arguments")))
        }
    };
    match head {
        "k_a+e_b" | "kaeb" => {
            let v = nums(args)?;
            arity(&v, 2)?;
            k_a_plus_e_b(v[0], v[1])
        }
        "star" => {
            let v = nums(args)?;
            arity(&v, 1)?;
            star(v[0])
        }
        "double_star" => {
            let v = nums(args)?;
            arity(&v, 3)?;
            double_star(v[0], v[1], v[2])
        }
        "cycle" => {
            let v = nums(args)?;
            arity(&v, 1)?;
            cycle(v[0])
        }
        "split" => {
            let v = nums(args)?;
            arity(&v, 2)?;
            split_witness(v[0], v[1])
        }
        "clique_star" => {
            let (omega, rest) = args
                .split_once(';')
                .ok_or_else(|| Error::InvalidParameters(format!("`{name}` needs `omega;a0,...`")))?;
            let omega = nums(omega)?;
            arity(&omega, 1)?;
            clique_star(&CliqueStarParams::new(omega[0], nums(rest)?))
        }
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h9_degree_sequence() {
        assert_eq!(h9().degrees(), vec![6, 4, 4, 6, 4, 4, 6, 4, 4]);
        assert_eq!(h9().edge_count(), 21);
    }

    #[test]
    fn named_presets() {
        assert_eq!(by_name("star(4)").unwrap(), star(4).unwrap());
        let g = by_name("K_a+E_b(2,1)").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(by_name("H9").unwrap(), h9());
        assert_eq!(by_name("clique_star(2;0,1,1)").unwrap().order(), 6);
        assert_eq!(by_name("K3").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(by_name("e4").unwrap(), Graph::empty(4).unwrap());
        assert!(matches!(by_name("petersen"), Err(Error::UnknownPreset(_))));
        assert!(matches!(by_name("star(x)"), Err(Error::InvalidParameters(_))));
        assert!(by_name("double_star(5,1,1)").is_err());
    }

    #[test]
    fn split_witnesses_have_requested_parameters() {
        for (alpha, omega) in [(2, 2), (3, 2), (2, 3), (4, 3), (3, 5)] {
            let g = split_witness(alpha, omega).unwrap();
            assert!(g.is_split());
            assert_eq!(g.independence_number().unwrap(), alpha);
            assert_eq!(g.clique_number().unwrap(), omega);
        }
    }
}
