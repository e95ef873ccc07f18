//! The flat `key = value` configuration read by `search`.

use std::path::PathBuf;

use dismis_core::families::FamilySpec;
use dismis_core::{Error, Limits, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub family: FamilySpec,
    pub budget: usize,
    pub seed: u64,
    pub workers: Option<usize>,
    pub output: Option<PathBuf>,
    pub limits: Limits,
}

const KEYS: [&str; 11] =
    ["family", "nmax", "n", "p", "path", "budget", "seed", "workers", "output", "max-n", "max-omega"];

/// Parses the configuration. Lines are `key = value` or `key: value`;
/// blank lines and `#` comments are ignored. Relative `path` and `output`
/// values are resolved against `base`.
pub fn parse_config(text: &str, base: &std::path::Path) -> Result<SearchConfig> {
    let mut pairs: Vec<(String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .or_else(|| line.split_once(':'))
            .ok_or_else(|| bad(format!("line {}: expected `key = value`", i + 1)))?;
        let (k, v) = (k.trim().replace('_', "-"), v.trim().to_string());
        if !KEYS.contains(&k.as_str()) {
            return Err(bad(format!("line {}: unknown key `{k}`", i + 1)));
        }
        if pairs.iter().any(|(seen, _)| *seen == k) {
            return Err(bad(format!("line {}: duplicate key `{k}`", i + 1)));
        }
        pairs.push((k, v));
    }
    let get = |k: &str| pairs.iter().find(|(key, _)| key == k).map(|(_, v)| v.as_str());
    let num = |k: &str| -> Result<Option<usize>> {
        get(k)
            .map(|v| v.parse().map_err(|_| bad(format!("`{k}` must be a non-negative integer, got `{v}`"))))
            .transpose()
    };
    let need = |k: &str, family: &str| -> Result<usize> {
        num(k)?.ok_or_else(|| bad(format!("family `{family}` needs `{k}`")))
    };

    let family_name = get("family").ok_or_else(|| bad("missing `family`".into()))?;
    let family = match family_name {
        "catalog" => match get("path") {
            Some(p) => FamilySpec::Catalog { path: base.join(p) },
            None => FamilySpec::Bundled { nmax: need("nmax", family_name)? },
        },
        "gnp" => {
            let p = get("p").unwrap_or("0.5");
            let p: f64 = p.parse().map_err(|_| bad(format!("`p` must be a number, got `{p}`")))?;
            FamilySpec::Gnp { n: need("n", family_name)?, p }
        }
        "trees" => FamilySpec::Trees { nmax: need("nmax", family_name)? },
        "unicyclic" => FamilySpec::Unicyclic { n: need("n", family_name)? },
        "odd-cycles" => FamilySpec::OddCycles { nmax: need("nmax", family_name)? },
        other => {
            return Err(bad(format!("unknown family `{other}`; expected catalog, gnp, trees, unicyclic or odd-cycles")))
        }
    };
    let random = matches!(family, FamilySpec::Gnp { .. } | FamilySpec::Unicyclic { .. });
    let budget = match num("budget")? {
        Some(b) => b,
        None if random => return Err(bad(format!("family `{family_name}` needs `budget`"))),
        None => usize::MAX,
    };
    let seed = get("seed")
        .map(|v| v.parse::<u64>().map_err(|_| bad(format!("`seed` must be an unsigned integer, got `{v}`"))))
        .transpose()?
        .unwrap_or(0);
    let mut limits = Limits::default();
    if let Some(n) = num("max-n")? {
        limits.max_n = n;
    }
    if let Some(o) = num("max-omega")? {
        limits.max_omega = o;
    }
    Ok(SearchConfig {
        family,
        budget,
        seed,
        workers: num("workers")?,
        output: get("output").map(|p| base.join(p)),
        limits,
    })
}

fn bad(msg: String) -> Error {
    Error::InvalidParameter(msg)
}
