//! Catalog persistence: a line-oriented human-diffable text format, a CSV
//! table export, and a structured JSON export with sorted keys.

use anyhow::{bail, Result};
use serde_json::{json, Value};
use sextic_core::catalog::{self, Family};
use sextic_core::enumeration::CurveClass;
use sextic_core::matching::RowMatch;

pub const SCHEMA: &str = catalog::CATALOG_SCHEMA_VERSION;

fn family_name(f: &Family) -> &'static str {
    match f {
        Family::External => "external",
        Family::TwoE6 => "two-e6",
        Family::Loop { .. } => "hexagon-with-loop",
        Family::DoubleLoop { .. } => "hexagon-with-double-loop",
        Family::Hex { .. } => "genuine-hexagon",
    }
}

fn params_string(f: &Family) -> String {
    let dash = |p: &Option<u32>| p.map_or("-".to_string(), |v| v.to_string());
    match f {
        Family::Loop { params, .. } => format!(
            "({})",
            params.iter().map(dash).collect::<Vec<_>>().join(",")
        ),
        Family::DoubleLoop { l, d9 } => {
            if *d9 {
                "D9".into()
            } else {
                format!("l={}", dash(l))
            }
        }
        Family::Hex { params, .. } => format!(
            "({})",
            params.iter().map(dash).collect::<Vec<_>>().join(",")
        ),
        _ => "-".into(),
    }
}

fn class_json(c: &CurveClass) -> Value {
    let sk = &c.datum.sk;
    let n = sk.darts() as u32;
    json!({
        "rotation": (0..n).map(|d| sk.rot(d)).collect::<Vec<_>>(),
        "involution": (0..n).map(|d| sk.inv(d)).collect::<Vec<_>>(),
        "hexagon": c.datum.hexagon,
        "d_regions": c.datum.d_faces.iter().collect::<Vec<_>>(),
        "real": c.real,
    })
}

pub fn to_json(classes: &[CurveClass], matches: &[RowMatch]) -> Result<String> {
    let rows: Vec<Value> = matches
        .iter()
        .map(|m| {
            let r = m.row;
            json!({
                "id": r.id,
                "set": r.set,
                "display": r.display,
                "figure": r.figure,
                "count": [r.count.0, r.count.1],
                "splitting": r.pi1.h1.splitting(),
                "h1": r.pi1.h1.display(),
                "torus": r.pi1.torus,
                "abelian": r.pi1.abelian,
                "external_group": r.pi1.external_group,
                "family": family_name(&r.family),
                "parameters": params_string(&r.family),
                "note": r.pi1.note,
                "classes": m.classes.iter().map(|&i| class_json(&classes[i])).collect::<Vec<_>>(),
            })
        })
        .collect();
    let doc = json!({
        "schema": SCHEMA,
        "rows": rows,
    });
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

/// Rejects unknown schema majors; returns the parsed document.
pub fn parse_json(text: &str) -> Result<Value> {
    let doc: Value = serde_json::from_str(text)?;
    let schema = doc
        .get("schema")
        .and_then(|s| s.as_str())
        .unwrap_or_default();
    let major = schema.split('.').next().unwrap_or_default();
    let ours = SCHEMA.split('.').next().unwrap();
    if major != ours {
        bail!("catalog schema {:?} has an unknown major version", schema);
    }
    Ok(doc)
}

pub fn to_csv(_classes: &[CurveClass], matches: &[RowMatch]) -> String {
    let mut out = String::from(
        "id,display_set,figure,count_real,count_conjugate_pairs,splitting,family,parameters\n",
    );
    for m in matches {
        let r = m.row;
        out.push_str(&format!(
            "{},{},{},{},{},{},{},\"{}\"\n",
            r.id,
            r.display,
            r.figure,
            r.count.0,
            r.count.1,
            r.pi1.h1.splitting(),
            family_name(&r.family),
            params_string(&r.family),
        ));
    }
    out
}

pub fn to_text(classes: &[CurveClass], matches: &[RowMatch]) -> String {
    let mut out = format!("# sextic catalog v{}\n", SCHEMA);
    out.push_str("# id | set | count | splitting | family | parameters | classes\n");
    for m in matches {
        let r = m.row;
        out.push_str(&format!(
            "{} | {} | ({},{}) | {} | {} | {} | {}\n",
            r.id,
            r.display,
            r.count.0,
            r.count.1,
            r.pi1.h1.splitting(),
            family_name(&r.family),
            params_string(&r.family),
            m.classes
                .iter()
                .map(|&i| format!("{} darts", classes[i].datum.sk.darts()))
                .collect::<Vec<_>>()
                .join(", "),
        ));
    }
    out
}

fn table_rows(table: catalog::Table) -> Vec<&'static catalog::Row> {
    catalog::rows()
        .iter()
        .filter(|r| r.table == table)
        .collect()
}

pub fn tables_markdown() -> String {
    let mut out = String::new();
    for (title, table) in [
        (
            "Maximal sets of singularities with a type E6 point: irreducible sextics",
            catalog::Table::Irreducible,
        ),
        (
            "Maximal sets of singularities with a type E6 point: reducible sextics",
            catalog::Table::Reducible,
        ),
    ] {
        out.push_str(&format!("## {}\n\n", title));
        out.push_str("| # | Set of singularities | Figure | Count | Parameters |\n");
        out.push_str("|---|----------------------|--------|-------|------------|\n");
        for r in table_rows(table) {
            out.push_str(&format!(
                "| {} | {} | {} | ({},{}) | {} |\n",
                r.id,
                r.display,
                r.figure,
                r.count.0,
                r.count.1,
                params_string(&r.family),
            ));
        }
        out.push('\n');
    }
    out
}

pub fn tables_csv() -> String {
    let mut out = String::from("table,id,set,figure,count_real,count_conjugate_pairs,parameters\n");
    for r in catalog::rows() {
        out.push_str(&format!(
            "{},{},{},{},{},{},\"{}\"\n",
            match r.table {
                catalog::Table::Irreducible => "irreducible",
                catalog::Table::Reducible => "reducible",
            },
            r.id,
            r.display,
            r.figure,
            r.count.0,
            r.count.1,
            params_string(&r.family),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use sextic_core::enumeration::enumerate_curve_classes;
    use sextic_core::matching::match_rows;

    #[test]
    fn json_round_trip() {
        let classes = enumerate_curve_classes();
        let matches = match_rows(&classes).unwrap();
        let text = to_json(&classes, &matches).unwrap();
        let doc = parse_json(&text).unwrap();
        let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
        assert_eq!(text, again, "parse(serialize(x)) must round-trip");
        assert_eq!(doc["rows"].as_array().unwrap().len(), 80);
    }

    #[test]
    fn unknown_major_rejected() {
        assert!(parse_json("{\"schema\": \"2.0\", \"rows\": []}").is_err());
    }
}
