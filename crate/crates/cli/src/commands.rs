use clap::{Args, ValueEnum};
use epqm::basis::{bound_wavefunction, resonance_wavefunction, BasisFamily, BasisSpec, BoundStateOptions, CoordinateMap};
use epqm::hamiltonian::{potential_matrix, reconstruct_local_potential};
use epqm::numerics::Grid;
use epqm::scattering::{fit_system_phase, phase_shift_sweep, TailWindow};
use epqm::spectra::{bound_states, resonances, SystemKind};

use crate::output::{Cell, Table};
use crate::systems::{build_entry, energy_scale_alpha, SystemArgs};
use crate::{CliError, Units};

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

/// `3`, `0..3` (inclusive) or `0,2,5`.
pub fn parse_indices(spec: &str) -> Result<Vec<usize>, CliError> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| invalid(format!("bad state index '{s}' in '{spec}'")))
    };
    let out: Vec<usize> = if let Some((lo, hi)) = spec.split_once("..") {
        let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
        if hi < lo {
            return Err(invalid(format!("empty index range '{spec}'")));
        }
        (lo..=hi).collect()
    } else {
        spec.split(',').map(num).collect::<Result<_, _>>()?
    };
    Ok(out)
}

fn energy_divisor(units: Units, alpha: Option<f64>) -> Result<f64, CliError> {
    match units {
        Units::Atomic => Ok(1.0),
        Units::Alpha2 => alpha
            .map(|a| a * a)
            .ok_or_else(|| invalid("--units alpha2 needs a system with an alpha parameter")),
    }
}

/// Rows (n, E_n) of the closed-form bound spectrum.
pub fn spectrum_table(system: &SystemArgs, n: usize, units: Units) -> Result<Table, CliError> {
    if n == 0 {
        return Err(invalid("--n must be at least 1"));
    }
    let entry = build_entry(system)?;
    let div = energy_divisor(units, energy_scale_alpha(&entry))?;
    let spec = bound_states(&entry, n)?;
    let mut t = Table::new(["n", "E"]);
    for (i, e) in spec.bound.iter().enumerate() {
        t.push(vec![Cell::Int(i as i64), Cell::Float(e / div)]);
    }
    Ok(t)
}

/// Rows (n, Re E, Im E); n = 0 is the bound state.
pub fn resonance_table(alpha: f64, beta: f64, n_max: usize, units: Units) -> Result<Table, CliError> {
    let div = energy_divisor(units, Some(alpha))?;
    let s = resonances(alpha, beta, n_max)?;
    let mut t = Table::new(["n", "re_E", "im_E"]);
    for (i, e) in s.bound.iter().enumerate() {
        t.push(vec![Cell::Int(i as i64), Cell::Float(e / div), Cell::Float(0.0)]);
    }
    for (i, z) in s.resonances.iter().enumerate() {
        t.push(vec![
            Cell::Int((i + s.bound.len()) as i64),
            Cell::Float(z.re / div),
            Cell::Float(z.im / div),
        ]);
    }
    Ok(t)
}

/// Window of the weighted polynomial tail used by `--tail-fit`.
pub const FIT_WINDOW: TailWindow = TailWindow {
    start: 4096,
    length: 512,
};

/// Rows (k, δ unwrapped, δ mod π) and optionally the tail-fit phase.
pub fn phase_shift_table(
    system: &SystemArgs,
    k_min: f64,
    k_max: f64,
    k_count: usize,
    tail_fit: bool,
) -> Result<Table, CliError> {
    if !(k_min > 0.0 && k_max >= k_min && k_max.is_finite()) || k_count == 0 {
        return Err(invalid(format!(
            "need 0 < k-min <= k-max and k-count >= 1, got k in [{k_min}, {k_max}], count {k_count}"
        )));
    }
    let entry = build_entry(system)?;
    let ks: Vec<f64> = if k_count == 1 {
        vec![k_min]
    } else {
        Grid::linspace(k_min, k_max, k_count)?.points().to_vec()
    };
    let samples = phase_shift_sweep(&entry, &ks)?;
    let mut cols = vec!["k", "delta", "delta_mod_pi"];
    if tail_fit {
        cols.push("delta_fit_mod_pi");
    }
    let mut t = Table::new(cols);
    for s in samples {
        let mut row = vec![Cell::Float(s.k), Cell::Float(s.delta), Cell::Float(s.reduced)];
        if tail_fit {
            row.push(Cell::Float(fit_system_phase(&entry, s.k, FIT_WINDOW)?.phase));
        }
        t.push(row);
    }
    Ok(t)
}

/// Columns x, |ψ_m| for each requested m.
pub fn wavefunction_table(
    system: &SystemArgs,
    ms: &[usize],
    x_min: f64,
    x_max: f64,
    points: usize,
    max_terms: usize,
) -> Result<Table, CliError> {
    if points < 2 || !(x_max > x_min) {
        return Err(invalid("need x-max > x-min and at least 2 points"));
    }
    let entry = build_entry(system)?;
    let grid = Grid::linspace(x_min, x_max, points)?;
    let opts = BoundStateOptions {
        max_terms,
        ..BoundStateOptions::default()
    };
    let mut columns = Vec::with_capacity(ms.len());
    for &m in ms {
        let wf = match entry.kind() {
            SystemKind::Resonance { alpha, beta } => resonance_wavefunction(alpha, beta, m, &grid, max_terms)?,
            _ => bound_wavefunction(&entry, m, &grid, &opts)?,
        };
        columns.push(wf.magnitudes());
    }
    let mut t = Table::new(std::iter::once("x".to_string()).chain(ms.iter().map(|m| format!("abs_psi_{m}"))));
    for (i, &x) in grid.points().iter().enumerate() {
        let mut row = vec![Cell::Float(x)];
        row.extend(columns.iter().map(|c| Cell::Float(c[i])));
        t.push(row);
    }
    Ok(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialKind {
    /// 2-parameter Morse V0(e^{-2αx} − 2βe^{-αx}).
    Morse,
    /// Z/x.
    Coulomb,
    /// ½κ⁴x².
    Oscillator,
    /// Constant c.
    Constant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisKind {
    Hermite,
    Laguerre,
    /// Laguerre functions of s = e^{-λx}.
    LaguerreExp,
    /// Legendre functions of y = sin(πx/a) on |x| ≤ a/2.
    LegendreBox,
}

#[derive(Debug, Clone, Args)]
pub struct ReconstructArgs {
    #[arg(long, value_enum)]
    pub potential: PotentialKind,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    #[arg(long, default_value_t = 2.0)]
    pub v0: f64,
    #[arg(long = "Z", default_value_t = -1.0)]
    pub z: f64,
    #[arg(long, default_value_t = 1.0)]
    pub kappa: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    #[arg(long, value_enum)]
    pub basis: BasisKind,
    /// Basis scale λ.
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    /// Laguerre index ν.
    #[arg(long, default_value_t = 1.0)]
    pub nu: f64,
    /// Box width a of the Legendre basis.
    #[arg(long = "box", default_value_t = 4.0)]
    pub box_width: f64,
    #[arg(long, default_value_t = 20)]
    pub n: usize,
    #[arg(long)]
    pub x_min: f64,
    #[arg(long)]
    pub x_max: f64,
    #[arg(long, default_value_t = 81)]
    pub points: usize,
}

impl ReconstructArgs {
    pub fn basis(&self) -> Result<BasisSpec, CliError> {
        Ok(match self.basis {
            BasisKind::Hermite => BasisSpec::hermite(self.lambda)?,
            BasisKind::Laguerre => BasisSpec::laguerre(self.nu, self.lambda)?,
            BasisKind::LaguerreExp => BasisSpec::new(
                BasisFamily::Laguerre { nu: self.nu, sigma: 0.0 },
                self.lambda,
                CoordinateMap::Exponential,
            )?,
            BasisKind::LegendreBox => BasisSpec::new(
                BasisFamily::Jacobi {
                    alpha: 0.0,
                    beta: 0.0,
                    sigma: 0.0,
                    tau: 0.0,
                },
                self.lambda,
                CoordinateMap::Sine { a: self.box_width },
            )?,
        })
    }

    pub fn potential(&self) -> impl Fn(f64) -> f64 + '_ {
        move |x| match self.potential {
            PotentialKind::Morse => {
                let e = (-self.alpha * x).exp();
                self.v0 * (e * e - 2.0 * self.beta * e)
            }
            PotentialKind::Coulomb => self.z / x,
            PotentialKind::Oscillator => 0.5 * self.kappa.powi(4) * x * x,
            PotentialKind::Constant => self.c,
        }
    }
}

/// Columns x, V(x), reconstructed V (empty where the basis density is too
/// small).
pub fn reconstruct_table(args: &ReconstructArgs) -> Result<Table, CliError> {
    if args.n == 0 || args.points < 2 || !(args.x_max > args.x_min) {
        return Err(invalid("need --n >= 1, x-max > x-min and at least 2 points"));
    }
    let spec = args.basis()?;
    let grid = Grid::linspace(args.x_min, args.x_max, args.points)?;
    let v = args.potential();
    let vm = potential_matrix(&v, &spec, args.n)?;
    let rec = reconstruct_local_potential(&vm, &spec, &grid, args.n)?;
    let mut t = Table::new(["x", "V", "V_reconstructed"]);
    for (&x, r) in grid.points().iter().zip(rec) {
        t.push(vec![Cell::Float(x), Cell::Float(v(x)), r.map_or(Cell::Missing, Cell::Float)]);
    }
    Ok(t)
}
