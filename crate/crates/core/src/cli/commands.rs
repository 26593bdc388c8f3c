use rayon::prelude::*;

use super::params::Params;
use super::table::{Cell, Table};
use super::CliError;
use crate::angular_solutions::AngularSolution;
use crate::bound_states::BoundLevel;
use crate::cross_sections::{scatter_probability, screened_rutherford_dcs, fit_screened, ScreenedRutherford};
use crate::radial_scattering::{
    coulomb_cross_section, phase_shift, radial_wavefunction, scattering_amplitude,
    RelativisticContext, Smoothing,
};
use crate::thermodynamics::{ThermoQuantities, ThermoState};

type Rows = Vec<Vec<Cell>>;

/// Evaluates every sweep point independently (in parallel) and keeps the
/// rows in sweep order. The first failing point, in sweep order, wins.
fn sweep_rows<F>(points: &[f64], f: F) -> Result<Rows, CliError>
where
    F: Fn(f64) -> Result<Rows, CliError> + Sync,
{
    let blocks: Vec<Result<Rows, CliError>> = points.par_iter().map(|&p| f(p)).collect();
    let mut rows = Vec::new();
    for block in blocks {
        rows.extend(block?);
    }
    Ok(rows)
}

fn table(columns: Vec<&'static str>, rows: Rows) -> Table {
    let mut t = Table::new(columns);
    for row in rows {
        t.push(row);
    }
    t
}

pub(super) fn run(command: &str, p: &Params) -> Result<Table, CliError> {
    match command {
        "phase-shifts" => phase_shifts(p),
        "wavefunction" => wavefunction(p),
        "cross-section" => cross_section(p),
        "bound-states" => bound_states(p),
        "thermo" => thermo(p),
        "angular" => angular(p),
        "screened-fit" => screened_fit(p),
        other => Err(CliError::Usage(format!("unknown subcommand {other}"))),
    }
}

fn phase_shifts(p: &Params) -> Result<Table, CliError> {
    let (mass, delta, lmax) = (p.real("mass")?, p.real("delta")?, p.integer("lmax")?);
    let energies = p.sweep("energy")?;
    let rows = sweep_rows(&energies, |energy| {
        let ctx = RelativisticContext::new(mass, energy, delta)?;
        (0..=lmax)
            .map(|ell| {
                Ok(vec![
                    Cell::Real(energy),
                    Cell::Int(ell as i64),
                    Cell::Real(ctx.wave_number),
                    Cell::Real(ctx.sommerfeld),
                    Cell::Real(phase_shift(&ctx, ell)?),
                ])
            })
            .collect()
    })?;
    Ok(table(
        vec!["energy [energy]", "ell [-]", "k [1/length]", "eta [-]", "delta_ell [rad]"],
        rows,
    ))
}

fn wavefunction(p: &Params) -> Result<Table, CliError> {
    let ctx = RelativisticContext::new(p.real("mass")?, p.real("energy")?, p.real("delta")?)?;
    let ell = p.integer_or("ell", 0)?;
    let radii = p.sweep("r")?;
    let rows = sweep_rows(&radii, |r| {
        Ok(vec![vec![
            Cell::Real(r),
            Cell::Int(ell as i64),
            Cell::Real(radial_wavefunction(&ctx, ell, r)?),
        ]])
    })?;
    Ok(table(vec!["r [length]", "ell [-]", "g [-]"], rows))
}

fn cross_section(p: &Params) -> Result<Table, CliError> {
    let screened = p.has("phi") || p.has("gamma-screen");
    let partial = ["mass", "energy", "delta", "lmax", "smoothing"].iter().any(|k| p.has(k));
    if screened && partial {
        return Err(CliError::Usage(
            "cross-section takes either --phi/--gamma-screen or --mass/--energy/--delta/--lmax, not both"
                .into(),
        ));
    }
    let angles = p.sweep("theta")?;
    if screened {
        let phi = p.real("phi")?;
        let gammas = p.sweep("gamma-screen")?;
        let rows = sweep_rows(&gammas, |g| {
            let model = ScreenedRutherford::new(phi, g)?;
            angles
                .iter()
                .map(|&theta| {
                    Ok(vec![
                        Cell::Real(g),
                        Cell::Real(theta),
                        Cell::Real(screened_rutherford_dcs(&model, theta)),
                        Cell::Real(scatter_probability(&model, theta)?),
                    ])
                })
                .collect()
        })?;
        return Ok(table(
            vec!["gamma_screen [-]", "theta [rad]", "dcs [area/sr]", "p_scatter [-]"],
            rows,
        ));
    }
    let (mass, delta, lmax) = (p.real("mass")?, p.real("delta")?, p.integer("lmax")?);
    let smoothing: Smoothing = p.word_or("smoothing", "abel").parse()?;
    let energies = p.sweep("energy")?;
    let rows = sweep_rows(&energies, |energy| {
        let ctx = RelativisticContext::new(mass, energy, delta)?;
        let phases = (0..=lmax).map(|l| phase_shift(&ctx, l)).collect::<Result<Vec<_>, _>>()?;
        angles
            .iter()
            .map(|&theta| {
                let f = scattering_amplitude(&phases, ctx.wave_number, theta, smoothing)?;
                Ok(vec![
                    Cell::Real(energy),
                    Cell::Real(theta),
                    Cell::Real(f.norm_sqr()),
                    Cell::Real(coulomb_cross_section(ctx.sommerfeld, ctx.wave_number, theta)?),
                ])
            })
            .collect()
    })?;
    Ok(table(
        vec!["energy [energy]", "theta [rad]", "dcs_partial_wave [area/sr]", "dcs_closed_form [area/sr]"],
        rows,
    ))
}

fn bound_states(p: &Params) -> Result<Table, CliError> {
    let mass = p.real("mass")?;
    let (nmax, lmax) = (p.integer("nmax")?, p.integer("lmax")?);
    let deltas = p.sweep("delta")?;
    let rows = sweep_rows(&deltas, |delta| {
        let mut rows = Vec::new();
        for n_r in 0..=nmax {
            for ell in 0..=lmax {
                let level = BoundLevel::new(mass, delta, n_r, ell)?;
                rows.push(vec![
                    Cell::Real(delta),
                    Cell::Int(n_r as i64),
                    Cell::Int(ell as i64),
                    Cell::Real(level.energy),
                    Cell::Real(level.energy - mass),
                    Cell::Real(level.nonrel_energy),
                ]);
            }
        }
        Ok(rows)
    })?;
    Ok(table(
        vec![
            "delta [-]",
            "n_r [-]",
            "ell [-]",
            "energy [energy]",
            "binding_energy [energy]",
            "nonrel_energy [energy]",
        ],
        rows,
    ))
}

fn thermo(p: &Params) -> Result<Table, CliError> {
    let xi = p.real("xi")?;
    let kb = p.real_or("kb", 1.0)?;
    let tau = match (p.has("tau"), p.has("delta") || p.has("mass")) {
        (true, false) => p.real("tau")?,
        (false, true) => p.real("delta")? / (2.0 * p.real("mass")?).sqrt(),
        (true, true) => {
            return Err(CliError::Usage("give either --tau or --delta with --mass, not both".into()))
        }
        (false, false) => return Err(CliError::Usage("thermo requires --tau (or --delta with --mass)".into())),
    };
    let betas = p.sweep("beta")?;
    let rows = sweep_rows(&betas, |beta| {
        let state = ThermoState::new(beta, xi, tau, kb)?;
        let q = ThermoQuantities::evaluate(&state)?;
        Ok(vec![vec![
            Cell::Real(beta),
            Cell::Real(state.argument()),
            Cell::Real(q.ln_z),
            Cell::Real(q.mean_energy),
            Cell::Real(q.specific_heat),
            Cell::Real(q.free_energy),
            Cell::Real(q.entropy),
        ]])
    })?;
    Ok(table(
        vec![
            "beta [1/energy]",
            "x [-]",
            "ln_z [-]",
            "mean_energy [energy]",
            "specific_heat [k_B]",
            "free_energy [energy]",
            "entropy [k_B]",
        ],
        rows,
    ))
}

fn angular(p: &Params) -> Result<Table, CliError> {
    let (chi, lam) = (p.real("chi")?, p.real("lam")?);
    let zeta = p.real_or("zeta", 1.0)?;
    let nmax = p.integer("nmax")?;
    let levels: Vec<AngularSolution> = (0..=nmax)
        .map(|n| {
            if chi == 0.0 {
                AngularSolution::degenerate(lam, n, zeta)
            } else {
                AngularSolution::polar(chi, lam, n, zeta)
            }
        })
        .collect::<Result<_, _>>()?;
    if !p.has("q") {
        let rows = levels
            .iter()
            .map(|h| {
                vec![
                    Cell::Int(h.n_r as i64),
                    Cell::Real(h.eigenvalue),
                    Cell::Real(h.separation_constant_squared()),
                ]
            })
            .collect();
        return Ok(table(
            vec!["n_r [-]", "eigenvalue [energy]", "separation_constant_sq [-]"],
            rows,
        ));
    }
    let points = p.sweep("q")?;
    let mut rows = Vec::new();
    for h in &levels {
        rows.extend(sweep_rows(&points, |q| {
            Ok(vec![vec![Cell::Int(h.n_r as i64), Cell::Real(q), Cell::Real(h.eval(q)?)]])
        })?);
    }
    Ok(table(vec!["n_r [-]", "q [rad]", "h [1/sqrt(rad)]"], rows))
}

fn screened_fit(p: &Params) -> Result<Table, CliError> {
    let sigma_tr = p.real("sigma-tr")?;
    let totals = p.sweep("sigma-tot")?;
    let rows = sweep_rows(&totals, |sigma_tot| {
        let model = fit_screened(sigma_tot, sigma_tr)?;
        Ok(vec![vec![
            Cell::Real(sigma_tot),
            Cell::Real(sigma_tr),
            Cell::Real(model.phi),
            Cell::Real(model.gamma_screen),
            Cell::Real(sigma_tr / sigma_tot),
        ]])
    })?;
    Ok(table(
        vec![
            "sigma_tot [area]",
            "sigma_tr [area]",
            "phi [area/sr]",
            "gamma_screen [-]",
            "transport_ratio [-]",
        ],
        rows,
    ))
}
