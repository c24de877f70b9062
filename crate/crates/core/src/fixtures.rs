use crate::error::{Error, Result};
use crate::generate::{complete_bipartite, cube_minus_antipodal_pair, q3_minus};
use crate::graph::Graph;

struct Stored {
    name: &'static str,
    json: &'static str,
    checksum: u64,
}

const STORED: &[Stored] = &[
    Stored { name: "B1", json: include_str!("../fixtures/B1.json"), checksum: 0xe04d24b0433825dd },
    Stored { name: "noMCP", json: include_str!("../fixtures/noMCP.json"), checksum: 0x5b4c9dff25172fa8 },
    Stored {
        name: "fig6benzenoid",
        json: include_str!("../fixtures/fig6benzenoid.json"),
        checksum: 0x4fed4a740ab4cdcc,
    },
    Stored {
        name: "fig7faithful",
        json: include_str!("../fixtures/fig7faithful.json"),
        checksum: 0xb68a861ebd2e56de,
    },
    Stored { name: "fig8prime", json: include_str!("../fixtures/fig8prime.json"), checksum: 0xf3117ace0d5476bb },
    Stored {
        name: "fig9phprime",
        json: include_str!("../fixtures/fig9phprime.json"),
        checksum: 0x194d98c50809ed9a,
    },
];

pub const FIXTURE_NAMES: &[&str] =
    &["Q3minus", "M41", "K23", "B1", "noMCP", "fig6benzenoid", "fig7faithful", "fig8prime", "fig9phprime"];

/// The triple `(u, v, w)` marked in the drawing of `noMCP`.
pub const NOMCP_TRIPLE: (usize, usize, usize) = (0, 6, 12);

/// FNV-1a over the canonical `u-v;` rendering of the sorted edge list.
pub fn edge_checksum(g: &Graph) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &(u, v) in g.edges() {
        for b in format!("{u}-{v};").bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

pub fn fixture(name: &str) -> Result<Graph> {
    let g = match name {
        "Q3minus" => q3_minus(),
        "M41" => cube_minus_antipodal_pair(4),
        "K23" => complete_bipartite(2, 3),
        _ => {
            let s = STORED
                .iter()
                .find(|s| s.name == name)
                .ok_or_else(|| Error::UnknownFamily(name.to_string()))?;
            let g = Graph::from_json(s.json)?;
            if edge_checksum(&g) != s.checksum {
                return Err(Error::Parse(format!("fixture {name} fails its checksum")));
            }
            return Ok(g);
        }
    };
    Ok(g.with_name(name))
}

pub fn all_fixtures() -> Vec<Graph> {
    FIXTURE_NAMES.iter().map(|n| fixture(n).expect("built-in fixture")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_fixtures_load() {
        for s in STORED {
            let g = fixture(s.name).unwrap();
            assert_eq!(g.name(), Some(s.name));
        }
        let sizes: Vec<(usize, usize)> = all_fixtures().iter().map(|g| (g.n(), g.m())).collect();
        assert_eq!(
            sizes,
            vec![(7, 9), (14, 24), (5, 6), (24, 36), (13, 15), (22, 27), (9, 11), (23, 36), (19, 23)]
        );
        assert!(fixture("nope").is_err());
    }
}
