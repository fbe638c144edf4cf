//! Named mod-p^k images: the curated 2-power groups behind the T4/T6/T8
//! census (RZB subgroup labels), plus the standard Borel / split-Cartan /
//! full groups addressable from the command line.

use anyhow::{anyhow, Result};
use itg_core::gl2::{borel, generate, gl2_full, split_cartan, GroupModN, MatModN};

struct NamedGroup {
    name: &'static str,
    level: u32,
    gens: &'static [[u32; 4]],
}

const NAMED: &[NamedGroup] = &[
    NamedGroup {
        name: "H_24e",
        level: 4,
        gens: &[[3, 0, 0, 1], [1, 2, 2, 3]],
    },
    NamedGroup {
        name: "H_24d",
        level: 4,
        gens: &[[1, 0, 0, 3], [1, 2, 2, 3], [1, 2, 2, 1]],
    },
    NamedGroup {
        name: "H_24",
        level: 4,
        gens: &[[3, 0, 0, 1], [1, 2, 2, 3], [3, 0, 0, 3]],
    },
    NamedGroup {
        name: "H_98e",
        level: 8,
        gens: &[[3, 0, 0, 1], [5, 0, 0, 1], [1, 0, 2, 1], [1, 4, 0, 1]],
    },
    NamedGroup {
        name: "H_98h",
        level: 8,
        gens: &[[5, 0, 0, 1], [1, 0, 2, 1], [1, 0, 0, 7], [1, 4, 0, 1]],
    },
    NamedGroup {
        name: "H_98o",
        level: 8,
        gens: &[[3, 0, 0, 1], [5, 0, 0, 1], [1, 0, 2, 1], [7, 4, 0, 7]],
    },
    NamedGroup {
        name: "H_98",
        level: 8,
        gens: &[[3, 0, 0, 1], [5, 0, 0, 1], [1, 0, 2, 1], [1, 4, 0, 1], [7, 0, 0, 7]],
    },
    NamedGroup {
        name: "H_193n",
        level: 8,
        gens: &[[3, 0, 0, 1], [5, 0, 0, 1], [1, 0, 2, 1]],
    },
    NamedGroup {
        name: "H_194l",
        level: 8,
        gens: &[[3, 0, 0, 1], [5, 0, 0, 1], [1, 0, 4, 1], [1, 0, 2, 5]],
    },
    NamedGroup {
        name: "H_215c",
        level: 16,
        gens: &[[3, 0, 0, 1], [7, 0, 0, 1], [1, 0, 2, 1], [1, 8, 0, 5]],
    },
    NamedGroup {
        name: "H_215l",
        level: 16,
        gens: &[[13, 0, 0, 15], [9, 0, 0, 15], [1, 0, 2, 1], [1, 8, 0, 5]],
    },
    NamedGroup {
        name: "H_215k",
        level: 16,
        gens: &[[13, 0, 0, 1], [1, 0, 2, 1], [1, 0, 0, 15], [15, 8, 0, 11]],
    },
    NamedGroup {
        name: "H_215",
        level: 16,
        gens: &[
            [13, 0, 0, 1],
            [1, 0, 2, 1],
            [1, 0, 0, 15],
            [15, 8, 0, 11],
            [15, 0, 0, 15],
        ],
    },
];

/// All census group names in table order.
pub fn census_names() -> Vec<&'static str> {
    NAMED.iter().map(|g| g.name).collect()
}

/// Resolve a named group: the curated H_* images, or B<N> (Borel),
/// D<p> (split Cartan), GL<N> (full group).
pub fn named_group(name: &str) -> Result<GroupModN> {
    for g in NAMED {
        if g.name == name {
            let gens: Vec<MatModN> = g
                .gens
                .iter()
                .map(|m| MatModN::new(g.level, m[0], m[1], m[2], m[3]))
                .collect();
            return generate(g.level, &gens).map_err(|e| anyhow!("{e}"));
        }
    }
    if let Some(n) = name.strip_prefix('B') {
        let n: u32 = n.parse().map_err(|_| anyhow!("bad level in '{name}'"))?;
        return Ok(borel(n));
    }
    if let Some(p) = name.strip_prefix('D') {
        let p: u32 = p.parse().map_err(|_| anyhow!("bad prime in '{name}'"))?;
        return Ok(split_cartan(p));
    }
    if let Some(n) = name.strip_prefix("GL") {
        let n: u32 = n.parse().map_err(|_| anyhow!("bad level in '{name}'"))?;
        return Ok(gl2_full(n));
    }
    Err(anyhow!(
        "unknown group '{name}' (expected one of {:?}, B<N>, D<p>, GL<N>)",
        census_names()
    ))
}

/// The prime a named image belongs to (its level's prime support).
pub fn group_prime(g: &GroupModN) -> Result<u32> {
    let mut n = g.level;
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19] {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            if n != 1 {
                return Err(anyhow!("level {} is not a prime power", g.level));
            }
            return Ok(p);
        }
    }
    Err(anyhow!("level {} is not a prime power", g.level))
}
