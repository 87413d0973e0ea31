//! CRGs that appear in the analysis of Forb(H₉) and Forb(C₆*).

use super::Crg;

fn parse(s: &str) -> Crg {
    s.parse().expect("static CRG")
}

/// `K(3, 0)`.
pub fn k1() -> Crg {
    parse("WWW;ggg")
}

/// Four white vertices, one black edge (0–1), five gray edges.
pub fn k2() -> Crg {
    parse("WWWW;bggggg")
}

/// Five white vertices, two disjoint black edges (0–1 and 2–3), eight gray
/// edges.
pub fn k3() -> Crg {
    parse("WWWWW;bggggggbgg")
}

/// `K(0, 2)`.
pub fn k4() -> Crg {
    parse("BB;g")
}

/// Two black vertices joined by a white edge plus a white vertex, the two
/// remaining edges gray.
pub fn c6_star() -> Crg {
    parse("BBW;wgg")
}

/// The all-black-vertex, all-white-edge CRG on `k` vertices.
pub fn black_clique(k: usize) -> Crg {
    Crg::from_fn(vec![super::VertexColor::Black; k], |_, _| super::EdgeColor::White)
        .expect("k >= 1")
}

pub fn by_name(name: &str) -> Option<Crg> {
    match name.trim().to_ascii_uppercase().as_str() {
        "K1" => Some(k1()),
        "K2" => Some(k2()),
        "K3" => Some(k3()),
        "K4" => Some(k4()),
        "C6STAR" | "C6*" => Some(c6_star()),
        _ => None,
    }
}
