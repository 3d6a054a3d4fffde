use clap::Args;
use epqm::spectra::{catalog, SystemCatalogEntry, SystemKind};

use crate::output::{Cell, Table};
use crate::CliError;

/// System name and its physical parameters; unset values take the catalog
/// defaults shown by `list-systems`.
#[derive(Debug, Clone, Args, Default)]
pub struct SystemArgs {
    /// Catalog name (see `list-systems`).
    #[arg(long)]
    pub system: String,
    #[arg(long = "Z")]
    pub z: Option<f64>,
    #[arg(long)]
    pub l: Option<u32>,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub v0: Option<f64>,
    #[arg(long)]
    pub mu: Option<f64>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
}

const NAMES: [&str; 9] = ["Z", "l", "lambda", "alpha", "beta", "v0", "mu", "a", "b"];

fn allowed(system: &str) -> Option<&'static [&'static str]> {
    Some(match system {
        "coulomb" => &["Z", "l"],
        "log-mp" => &["lambda", "beta", "v0", "l"],
        "power-mp" => &["lambda", "mu", "l"],
        "morse" => &["alpha", "beta", "v0"],
        "log-cdh" => &["alpha", "beta", "mu", "a", "b"],
        "power-cdh" => &["alpha", "l", "mu", "a", "b"],
        "linear-cdh" => &["alpha", "mu", "a", "b"],
        "resonance" => &["alpha", "beta"],
        _ => return None,
    })
}

impl SystemArgs {
    fn given(&self) -> Vec<&'static str> {
        let set = [
            self.z.is_some(),
            self.l.is_some(),
            self.lambda.is_some(),
            self.alpha.is_some(),
            self.beta.is_some(),
            self.v0.is_some(),
            self.mu.is_some(),
            self.a.is_some(),
            self.b.is_some(),
        ];
        NAMES.iter().zip(set).filter(|(_, s)| *s).map(|(n, _)| *n).collect()
    }
}

/// α of the system, for systems whose energies scale with α².
pub fn energy_scale_alpha(entry: &SystemCatalogEntry) -> Option<f64> {
    match entry.kind() {
        SystemKind::Morse { alpha, .. }
        | SystemKind::LogCDH { alpha, .. }
        | SystemKind::PowerCDH { alpha, .. }
        | SystemKind::LinearCDH { alpha }
        | SystemKind::Resonance { alpha, .. } => Some(alpha),
        _ => None,
    }
}

/// Catalog entry for the flags, after checking that every flag applies.
pub fn build_entry(args: &SystemArgs) -> Result<SystemCatalogEntry, CliError> {
    let name = args.system.as_str();
    let ok = allowed(name).ok_or_else(|| {
        CliError::Validation(format!(
            "unknown system '{name}'; expected one of {}",
            catalog().iter().map(|e| e.name.as_str()).collect::<Vec<_>>().join(", ")
        ))
    })?;
    if let Some(bad) = args.given().into_iter().find(|g| !ok.contains(g)) {
        return Err(CliError::Validation(format!(
            "--{bad} does not apply to system '{name}' (accepted: {})",
            ok.iter().map(|o| format!("--{o}")).collect::<Vec<_>>().join(", ")
        )));
    }
    let default = catalog()
        .into_iter()
        .find(|e| e.name == name)
        .expect("every accepted name is in the catalog");
    let entry = match default.kind() {
        SystemKind::Coulomb { z, l } => SystemCatalogEntry::coulomb(args.z.unwrap_or(z), args.l.unwrap_or(l)),
        SystemKind::LogMP { lambda, beta, v0, l } => SystemCatalogEntry::log_mp(
            args.lambda.unwrap_or(lambda),
            args.beta.unwrap_or(beta),
            args.v0.unwrap_or(v0),
            args.l.unwrap_or(l),
        ),
        SystemKind::PowerMP { lambda, mu, l } => SystemCatalogEntry::power_mp(
            args.lambda.unwrap_or(lambda),
            args.mu.unwrap_or(mu),
            args.l.unwrap_or(l),
        ),
        SystemKind::Morse { alpha, beta, v0 } => SystemCatalogEntry::morse(
            args.alpha.unwrap_or(alpha),
            args.beta.unwrap_or(beta),
            args.v0.unwrap_or(v0),
        ),
        SystemKind::LogCDH { alpha, beta } => {
            let p = default.dual_hahn().expect("dual Hahn system");
            SystemCatalogEntry::log_cdh(
                args.alpha.unwrap_or(alpha),
                args.beta.unwrap_or(beta),
                args.mu.unwrap_or(p.mu().re),
                args.a.unwrap_or(p.a().re),
                args.b.unwrap_or(p.b().re),
            )
        }
        SystemKind::PowerCDH { alpha, l } => {
            let p = default.dual_hahn().expect("dual Hahn system");
            SystemCatalogEntry::power_cdh(
                args.alpha.unwrap_or(alpha),
                args.l.unwrap_or(l),
                args.mu.unwrap_or(p.mu().re),
                args.a.unwrap_or(p.a().re),
                args.b.unwrap_or(p.b().re),
            )
        }
        SystemKind::LinearCDH { alpha } => {
            let p = default.dual_hahn().expect("dual Hahn system");
            SystemCatalogEntry::linear_cdh(
                args.alpha.unwrap_or(alpha),
                args.mu.unwrap_or(p.mu().re),
                args.a.unwrap_or(p.a().re),
                args.b.unwrap_or(p.b().re),
            )
        }
        SystemKind::Resonance { alpha, beta } => {
            SystemCatalogEntry::resonance(args.alpha.unwrap_or(alpha), args.beta.unwrap_or(beta))
        }
    }?;
    Ok(entry)
}

fn describe(entry: &SystemCatalogEntry) -> String {
    let cdh = |head: String| {
        let p = entry.dual_hahn().expect("dual Hahn system");
        format!("{head} mu={} a={} b={}", p.mu().re, p.a().re, p.b().re)
    };
    match entry.kind() {
        SystemKind::Coulomb { z, l } => format!("Z={z} l={l}"),
        SystemKind::LogMP { lambda, beta, v0, l } => format!("lambda={lambda} beta={beta} v0={v0} l={l}"),
        SystemKind::PowerMP { lambda, mu, l } => format!("lambda={lambda} mu={mu} l={l}"),
        SystemKind::Morse { alpha, beta, v0 } => format!("alpha={alpha} beta={beta} v0={v0}"),
        SystemKind::LogCDH { alpha, beta } => cdh(format!("alpha={alpha} beta={beta}")),
        SystemKind::PowerCDH { alpha, l } => cdh(format!("alpha={alpha} l={l}")),
        SystemKind::LinearCDH { alpha } => cdh(format!("alpha={alpha}")),
        SystemKind::Resonance { alpha, beta } => format!("alpha={alpha} beta={beta}"),
    }
}

pub fn list_table() -> Table {
    let mut t = Table::new(["system", "class", "defaults"]);
    for e in catalog() {
        t.push(vec![
            Cell::Text(e.name.clone()),
            Cell::Text(format!("{:?}", e.class())),
            Cell::Text(describe(&e)),
        ]);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(system: &str) -> SystemArgs {
        SystemArgs {
            system: system.into(),
            ..SystemArgs::default()
        }
    }

    #[test]
    fn defaults_reproduce_catalog() {
        for e in catalog() {
            assert_eq!(build_entry(&args(&e.name)).unwrap(), e);
        }
    }

    #[test]
    fn foreign_flag_rejected() {
        let mut a = args("morse");
        a.z = Some(1.0);
        assert!(matches!(build_entry(&a), Err(CliError::Validation(_))));
        assert!(matches!(build_entry(&args("nope")), Err(CliError::Validation(_))));
    }

    #[test]
    fn invalid_value_is_validation() {
        let mut a = args("morse");
        a.alpha = Some(-1.0);
        assert_eq!(build_entry(&a).unwrap_err().exit_code(), 2);
    }
}
