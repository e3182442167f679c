//! Named small groups.

use crate::group::{FiniteGroup, GroupError, DEFAULT_CLOSURE_CAP};

/// Names accepted by [`by_name`], in catalog order.
pub const NAMES: &[&str] = &["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "V4", "S3", "D4", "Q8", "D6", "A4", "S4"];

/// Looks up a catalog group by name (case-insensitive).
pub fn by_name(name: &str) -> Option<FiniteGroup> {
    let upper = name.trim().to_ascii_uppercase();
    if let Some(n) = upper.strip_prefix('C').and_then(|n| n.parse::<usize>().ok()) {
        return (1..=8).contains(&n).then(|| cyclic(n));
    }
    match upper.as_str() {
        "V4" | "KLEIN4" => Some(klein_four()),
        "S3" | "D3" => Some(symmetric(3)),
        "S4" => Some(symmetric(4)),
        "D4" => Some(dihedral(4)),
        "D6" => Some(dihedral(6)),
        "Q8" => Some(quaternion()),
        "A4" => Some(alternating4()),
        _ => None,
    }
}

/// Every catalog group, in catalog order.
pub fn all() -> Vec<(&'static str, FiniteGroup)> {
    NAMES.iter().map(|&n| (n, by_name(n).expect("catalog name resolves"))).collect()
}

/// `C_n` from its addition table, with elements `e, a, a^2, ...`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1, "cyclic group of order 0");
    let names = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{i}"),
        })
        .collect();
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup::from_table(names, table).expect("cyclic table is a group")
}

/// `S_n` generated by a transposition and an `n`-cycle.
pub fn symmetric(n: usize) -> FiniteGroup {
    assert!(n >= 2);
    let mut transposition: Vec<usize> = (0..n).collect();
    transposition.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    FiniteGroup::from_permutations(&[transposition, cycle]).expect("valid permutations")
}

/// Symmetries of a regular `n`-gon acting on its vertices.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 3);
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::from_permutations(&[rotation, reflection]).expect("valid permutations")
}

pub fn klein_four() -> FiniteGroup {
    FiniteGroup::from_permutations(&[vec![1, 0, 3, 2], vec![2, 3, 0, 1]]).expect("valid permutations")
}

pub fn alternating4() -> FiniteGroup {
    FiniteGroup::from_permutations(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).expect("valid permutations")
}

/// Unit quaternions `{±1, ±i, ±j, ±k}`.
pub fn quaternion() -> FiniteGroup {
    try_quaternion().expect("quaternion closure is a group")
}

fn try_quaternion() -> Result<FiniteGroup, GroupError> {
    // (negative, unit) with unit 0 = 1, 1 = i, 2 = j, 3 = k.
    type Quat = (bool, u8);
    fn unit_product(a: u8, b: u8) -> (bool, u8) {
        match (a, b) {
            (0, u) | (u, 0) => (false, u),
            (a, b) if a == b => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!("units are 0..4"),
        }
    }
    let mul = |p: &Quat, q: &Quat| {
        let (neg, unit) = unit_product(p.1, q.1);
        (p.0 ^ q.0 ^ neg, unit)
    };
    let name = |q: &Quat| {
        let unit = ["1", "i", "j", "k"][q.1 as usize];
        if q.0 {
            format!("-{unit}")
        } else {
            unit.to_string()
        }
    };
    let (group, _) = FiniteGroup::from_closure(&[(false, 1), (false, 2)], (false, 0), mul, name, DEFAULT_CLOSURE_CAP)?;
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        let orders: Vec<(&str, usize)> = all().iter().map(|(n, g)| (*n, g.order())).collect();
        assert_eq!(
            orders,
            vec![
                ("C1", 1),
                ("C2", 2),
                ("C3", 3),
                ("C4", 4),
                ("C5", 5),
                ("C6", 6),
                ("C7", 7),
                ("C8", 8),
                ("V4", 4),
                ("S3", 6),
                ("D4", 8),
                ("Q8", 8),
                ("D6", 12),
                ("A4", 12),
                ("S4", 24),
            ]
        );
    }

    #[test]
    fn abelian_members() {
        for (name, g) in all() {
            let expected = name.starts_with('C') || name == "V4";
            assert_eq!(g.is_abelian(), expected, "{name}");
        }
    }

    #[test]
    fn quaternion_commutator_subgroup_is_plus_minus_one() {
        let q = quaternion();
        let derived = q.commutator_subgroup();
        let names: Vec<&str> = derived.members().iter().map(|&g| q.name(g)).collect();
        assert_eq!(names.len(), 2);
        assert!(names.contains(&"1") && names.contains(&"-1"));
    }

    #[test]
    fn unknown_names() {
        assert!(by_name("C9").is_none());
        assert!(by_name("C0").is_none());
        assert!(by_name("GL2").is_none());
        assert_eq!(by_name("s3").unwrap().order(), 6);
    }
}
