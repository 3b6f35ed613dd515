use super::braid::BraidWord;
use crate::error::{Error, Result};

/// Names accepted by [`knot_table`].
pub const KNOT_NAMES: [&str; 9] = ["unknot", "trefoil", "figure8", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1"];

/// Standard braid presentation of a small named knot.
pub fn knot_table(name: &str) -> Result<BraidWord> {
    let (strands, letters): (usize, &[i32]) = match name {
        "unknot" => (1, &[]),
        "trefoil" | "3_1" => (2, &[1, 1, 1]),
        "figure8" | "4_1" => (3, &[1, -2, 1, -2]),
        "5_1" => (2, &[1, 1, 1, 1, 1]),
        "5_2" => (3, &[1, 1, 1, 2, -1, 2]),
        "6_1" => (4, &[1, 1, 2, -1, -3, 2, -3]),
        "6_2" => (3, &[1, 1, 1, -2, 1, -2]),
        "6_3" => (3, &[1, 1, -2, 1, -2, -2]),
        "7_1" => (2, &[1, 1, 1, 1, 1, 1, 1]),
        _ => return Err(Error::UnknownKnot(name.to_string())),
    };
    BraidWord::new(strands, letters.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_are_knots() {
        for name in KNOT_NAMES {
            assert!(knot_table(name).unwrap().is_knot(), "{name}");
        }
    }

    #[test]
    fn lookups() {
        assert!(knot_table("unknot").unwrap().is_empty());
        assert_eq!(knot_table("trefoil").unwrap().to_text(), "1 1 1");
        assert_eq!(knot_table("figure8").unwrap().to_text(), "1 -2 1 -2");
        assert_eq!(knot_table("8_19"), Err(Error::UnknownKnot("8_19".into())));
    }
}
