//! Named groups with embedded generators.
//!
//! Generators are 1-based cycle notation copied from the transitive groups
//! library (the `TransitiveGroup(n, i)` index is noted per entry). Degree,
//! order, transitivity and 2-transitivity are asserted when a fixture loads.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{internal, Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy)]
pub struct FixtureSpec {
    pub name: &'static str,
    pub degree: usize,
    pub order: u128,
    pub two_transitive: bool,
    pub source: &'static str,
    pub generators: &'static [&'static str],
}

pub const CATALOG: &[FixtureSpec] = &[
    FixtureSpec {
        name: "M11-deg12",
        degree: 12,
        order: 7920,
        two_transitive: true,
        source: "TransitiveGroup(12,272)",
        generators: &["(1,7,3,10,5,9,6,12)(2,11,8,4)", "(1,6,3,9)(2,7,12,10,4,5,11,8)"],
    },
    FixtureSpec {
        name: "M12-deg12",
        degree: 12,
        order: 95040,
        two_transitive: true,
        source: "TransitiveGroup(12,295)",
        generators: &["(1,11,2,3,4)(5,8,12,6,7)", "(1,9,5,12,11,8,2,4)(6,10)"],
    },
    FixtureSpec {
        name: "A7-deg15",
        degree: 15,
        order: 2520,
        two_transitive: true,
        source: "TransitiveGroup(15,47)",
        generators: &["(1,9,10,3,14)(2,15,7,12,6)(4,5,11,13,8)", "(1,2,3)(5,6,7)(8,10,9)(12,14,13)"],
    },
    FixtureSpec {
        name: "M22-deg22",
        degree: 22,
        order: 443520,
        two_transitive: true,
        source: "TransitiveGroup(22,38)",
        generators: &[
            "(1,17,9,5,10,22,8)(3,20,15,12,19,11,14)(4,21,16,13,7,18,6)",
            "(1,5,10)(2,17,12)(3,8,4)(6,16,19)(9,18,21)(14,20,22)",
        ],
    },
    FixtureSpec {
        name: "M22:2-deg22",
        degree: 22,
        order: 887040,
        two_transitive: true,
        source: "TransitiveGroup(22,41)",
        generators: &[
            "(1,15,18,2,9,20,13,21,17,3,4,16)(5,12,22,11,8,14)(6,10,19,7)",
            "(1,22,17,12,15)(2,5,8,20,21)(3,16,11,9,7)(4,10,6,13,18)",
        ],
    },
    FixtureSpec {
        name: "M24",
        degree: 24,
        order: 244823040,
        two_transitive: true,
        source: "TransitiveGroup(24,24680)",
        generators: &[
            "(1,2)(3,4)(5,24)(6,12)(7,9)(8,10)(11,17)(13,14)(15,16)(18,23)(19,21)(20,22)",
            "(1,8,17)(2,18,7)(3,13,14)(4,20,19)(5,6,15)(21,24,23)",
        ],
    },
    FixtureSpec {
        // elements r^i s^j labelled i + 6j + 1, acted on by right multiplication
        name: "D12-regular",
        degree: 12,
        order: 12,
        two_transitive: false,
        source: "right regular representation of <r, s | r^6, s^2, (rs)^2>",
        generators: &["(1,2,3,4,5,6)(7,12,11,10,9,8)", "(1,7)(2,8)(3,9)(4,10)(5,11)(6,12)"],
    },
];

pub fn names() -> Vec<&'static str> {
    CATALOG.iter().map(|f| f.name).collect()
}

pub fn spec(name: &str) -> Result<&'static FixtureSpec> {
    CATALOG.iter().find(|f| f.name == name).ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

/// Loads a fixture and checks its recorded degree, order and transitivity.
pub fn fixture(name: &str) -> Result<PermGroup> {
    let spec = spec(name)?;
    let gens = spec.generators.iter().map(|s| Permutation::parse_cycles(spec.degree, s)).collect::<Result<Vec<_>>>()?;
    let g = PermGroup::new(spec.degree, gens)?;
    let order = g.order()?;
    if order != spec.order {
        return Err(internal(alloc::format!("fixture {name}: order {order}, expected {}", spec.order)));
    }
    if !g.is_transitive() {
        return Err(internal(alloc::format!("fixture {name} is not transitive")));
    }
    if g.is_two_transitive()? != spec.two_transitive {
        return Err(internal(alloc::format!("fixture {name}: 2-transitivity mismatch")));
    }
    Ok(g)
}
