//! Byte-stable text and JSON renderings of a character table.

use serde::Serialize;

use super::CharacterTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableExport {
    pub name: String,
    pub order: u64,
    pub conductor: usize,
    pub class_sizes: Vec<usize>,
    pub element_orders: Vec<usize>,
    pub degrees: Vec<u64>,
    /// Values as sums of roots of unity, e.g. `E5+E5^4`.
    pub rows: Vec<Vec<String>>,
}

impl CharacterTable {
    pub fn export(&self, name: &str) -> TableExport {
        TableExport {
            name: name.to_string(),
            order: self.order(),
            conductor: self.conductor(),
            class_sizes: self.class_sizes().to_vec(),
            element_orders: self.class_orders().to_vec(),
            degrees: self.degrees().to_vec(),
            rows: (0..self.len())
                .map(|chi| (0..self.len()).map(|k| self.value_string(chi, k)).collect())
                .collect(),
        }
    }
}

impl TableExport {
    /// Header lines followed by one tab-separated line per character.
    pub fn to_text(&self) -> String {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        out.push_str(&format!("group: {}\n", self.name));
        out.push_str(&format!("order: {}\n", self.order));
        out.push_str(&format!("exponent: {}\n", self.conductor));
        out.push_str(&format!("class sizes: {}\n", join(&self.class_sizes)));
        out.push_str(&format!("element orders: {}\n", join(&self.element_orders)));
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(&format!("X.{}\t{}\n", i + 1, row.join("\t")));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("export serializes")
    }
}

#[cfg(test)]
mod tests {
    use crate::chartab::dixon_character_table;
    use crate::classes::conjugacy_classes;
    use crate::group::{from_permutation_generators, Permutation, DEFAULT_ORDER_CAP};

    #[test]
    fn s3_export_is_stable() {
        let t = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let c = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let g = from_permutation_generators(&[t, c], DEFAULT_ORDER_CAP).unwrap();
        let p = conjugacy_classes(&g);
        let table = dixon_character_table(&g, &p).unwrap();
        let text = table.export("S3").to_text();
        assert_eq!(
            text,
            "group: S3\norder: 6\nexponent: 6\nclass sizes: 1 2 3\nelement orders: 1 3 2\n\
             X.1\t1\t1\t1\nX.2\t1\t1\t-1\nX.3\t2\t-1\t0\n"
        );
        let json: serde_json::Value = serde_json::from_str(&table.export("S3").to_json()).unwrap();
        assert_eq!(json["degrees"], serde_json::json!([1, 1, 2]));
    }
}
