//! On-disk cache of KL elements under `HX_CACHE_DIR`, one file per algebra.

use std::path::PathBuf;
use std::str::FromStr;

use hx_core::{ElemId, IBig, KlBasis, KlElement, LaurentPoly};
use serde_json::{json, Value};

use crate::encode;

const VERSION: u64 = 1;

fn path_for(kl: &KlBasis) -> Option<PathBuf> {
    let dir = std::env::var_os("HX_CACHE_DIR")?;
    Some(PathBuf::from(dir).join(format!("kl-{:016x}.json", kl.algebra().fingerprint())))
}

fn decode_poly(v: &Value) -> Option<LaurentPoly> {
    let mut terms = Vec::new();
    for t in v.as_array()? {
        let t = t.as_array()?;
        let e = i32::try_from(t.first()?.as_i64()?).ok()?;
        let c = IBig::from_str(&t.get(1)?.as_number()?.to_string()).ok()?;
        terms.push((e, c));
    }
    Some(LaurentPoly::from_terms(terms))
}

fn decode(v: &Value, dim: usize) -> Option<Vec<KlElement>> {
    let mut out = Vec::new();
    for e in v.as_array()? {
        let e = e.as_array()?;
        let top = e.first()?.as_u64()? as usize;
        let mut coords = Vec::new();
        for c in e.get(1)?.as_array()? {
            let c = c.as_array()?;
            let y = c.first()?.as_u64()? as usize;
            if y >= dim {
                return None;
            }
            coords.push((ElemId(y as u32), decode_poly(c.get(1)?)?));
        }
        if top >= dim || coords.last().map(|c| c.0) != Some(ElemId(top as u32)) {
            return None;
        }
        out.push(KlElement { top: ElemId(top as u32), coords });
    }
    Some(out)
}

/// Seeds `kl` from the cache; returns how many elements were loaded.
pub fn load(kl: &KlBasis) -> usize {
    let Some(path) = path_for(kl) else { return 0 };
    let Ok(text) = std::fs::read_to_string(&path) else { return 0 };
    let parsed: Option<Vec<KlElement>> = serde_json::from_str::<Value>(&text).ok().and_then(|v| {
        let ok = v["version"].as_u64() == Some(VERSION) && v["dim"].as_u64() == Some(kl.algebra().dim() as u64);
        if ok { decode(&v["elements"], kl.algebra().dim()) } else { None }
    });
    match parsed {
        Some(elems) => elems.into_iter().filter(|c| kl.insert(c.clone())).count(),
        None => {
            eprintln!("hx: ignoring unreadable cache {}", path.display());
            0
        }
    }
}

/// Writes every computed element if more are known than were loaded.
pub fn store(kl: &KlBasis, loaded: usize) {
    let Some(path) = path_for(kl) else { return };
    let elems: Vec<Value> = kl
        .computed()
        .map(|c| {
            let coords: Vec<Value> = c.coords.iter().map(|(y, p)| json!([y.0, encode::poly(p)])).collect();
            json!([c.top.0, coords])
        })
        .collect();
    if elems.len() <= loaded {
        return;
    }
    let doc = json!({ "version": VERSION, "dim": kl.algebra().dim(), "elements": elems });
    let write = || -> std::io::Result<()> {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        std::fs::write(&tmp, doc.to_string())?;
        std::fs::rename(&tmp, &path)
    };
    if let Err(e) = write() {
        eprintln!("hx: could not write cache {}: {e}", path.display());
    }
}
