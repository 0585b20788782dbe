//! Algebra specifications: `chain:<n>`, `file:<path>`, `product:<spec>x<spec>...`.

use std::fs;

use mvgraph_core::json::algebra_from_json;
use mvgraph_core::MvAlgebra;

const ATOMS: [&str; 2] = ["chain:", "file:"];

pub fn load(spec: &str) -> Result<MvAlgebra, String> {
    if let Some(rest) = spec.strip_prefix("product:") {
        let parts = split_product(rest)?;
        let factors = parts
            .iter()
            .map(|p| load_atom(p))
            .collect::<Result<Vec<_>, _>>()?;
        return MvAlgebra::direct_product(&factors).map_err(|e| e.to_string());
    }
    load_atom(spec)
}

fn load_atom(spec: &str) -> Result<MvAlgebra, String> {
    if let Some(n) = spec.strip_prefix("chain:") {
        let n: usize = n
            .parse()
            .map_err(|_| format!("chain order must be an integer, got {n:?}"))?;
        return MvAlgebra::lukasiewicz_chain(n).map_err(|e| e.to_string());
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        return algebra_from_json(&text).map_err(|e| format!("{path}: {e}"));
    }
    Err(format!(
        "unrecognised algebra {spec:?}; expected chain:<n>, file:<path> or product:<spec>x<spec>..."
    ))
}

/// Splits at every `x` that is directly followed by another factor prefix, so
/// file names containing `x` stay intact.
fn split_product(rest: &str) -> Result<Vec<&str>, String> {
    let mut parts = Vec::new();
    let mut start = 0;
    for (i, _) in rest.match_indices('x') {
        let tail = &rest[i + 1..];
        if i > start && ATOMS.iter().any(|a| tail.starts_with(a)) {
            parts.push(&rest[start..i]);
            start = i + 1;
        }
    }
    parts.push(&rest[start..]);
    if parts.iter().any(|p| p.is_empty()) {
        return Err(format!("empty factor in product:{rest}"));
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_on_factor_boundaries() {
        assert_eq!(
            split_product("chain:2xchain:3").unwrap(),
            ["chain:2", "chain:3"]
        );
        assert_eq!(
            split_product("file:box.jsonxchain:2").unwrap(),
            ["file:box.json", "chain:2"]
        );
        assert!(split_product("").is_err());
    }

    #[test]
    fn loads_products() {
        assert_eq!(load("product:chain:2xchain:2xchain:3").unwrap().order(), 12);
        assert!(load("chain:1").is_err());
        assert!(load("ring:4").is_err());
    }
}
