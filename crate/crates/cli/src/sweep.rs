//! Grid evaluation and CSV output.

use std::io::Write;

use catqubit::oracle::{gram_encoded_density, CoherentSpanState, MAX_ENUMERATED};
use catqubit::{
    concurrence, concurrence_x, evolved_concurrence, flip_prob_single, flip_prob_state, success_prob,
    transmit_encoded, ChannelParams, CodeSpec, RealAmplitude, TwoModeCatState, TwoQubitDensity, XMatrix,
};
use rayon::prelude::*;

use crate::config::{Route, SweepConfig};
use crate::format::{g9, g9_opt};

/// Rows whose routes differ by at least this much are flagged.
pub const DISAGREEMENT_LIMIT: f64 = 1e-6;
/// Off-X magnitude below which a density counts as X-shaped.
pub const X_SPARSITY: f64 = 1e-12;

pub const HEADER: &str = "alpha,eta,theta,w,n,p_e,P_e,p_success,concurrence_general,concurrence_x,\
concurrence_evolution,max_route_disagreement,flag";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub alpha: f64,
    pub eta: f64,
    pub theta: f64,
    pub w: f64,
    pub code: CodeSpec,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub point: GridPoint,
    pub p_e: Option<f64>,
    pub state_p_e: Option<f64>,
    pub p_success: Option<f64>,
    pub general: Option<f64>,
    pub x: Option<f64>,
    pub evolution: Option<f64>,
    pub max_route_disagreement: Option<f64>,
    pub flag: Flag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flag {
    None,
    Disagreement,
    Degenerate,
}

impl Flag {
    fn as_str(self) -> &'static str {
        match self {
            Self::None => "",
            Self::Disagreement => "route-disagreement",
            Self::Degenerate => "degenerate",
        }
    }
}

impl ResultRow {
    pub fn to_csv(&self) -> String {
        let p = &self.point;
        [
            g9(p.alpha),
            g9(p.eta),
            g9(p.theta),
            g9(p.w),
            p.code.n().to_string(),
            g9_opt(self.p_e),
            g9_opt(self.state_p_e),
            g9_opt(self.p_success),
            g9_opt(self.general),
            g9_opt(self.x),
            g9_opt(self.evolution),
            g9_opt(self.max_route_disagreement),
            self.flag.as_str().to_string(),
        ]
        .join(",")
    }
}

/// Lexicographic over (alpha, eta, theta, w, n).
pub fn grid(cfg: &SweepConfig) -> Vec<GridPoint> {
    let mut points = Vec::new();
    for alpha in cfg.alphas() {
        for &eta in &cfg.eta {
            for &theta in &cfg.theta {
                for &w in &cfg.w {
                    for &code in &cfg.codes {
                        points.push(GridPoint {
                            alpha,
                            eta,
                            theta,
                            w,
                            code,
                        });
                    }
                }
            }
        }
    }
    points
}

fn general_route(s: &TwoModeCatState, ch: ChannelParams, code: CodeSpec) -> Option<(f64, TwoQubitDensity)> {
    let rho = transmit_encoded(s, ch, code).ok()?;
    Some((concurrence(&rho).ok()?, rho))
}

fn oracle_route(s: &TwoModeCatState, ch: ChannelParams, code: CodeSpec) -> Option<f64> {
    if code.n() > MAX_ENUMERATED {
        return None;
    }
    let rho = gram_encoded_density(&CoherentSpanState::from_cat(s), ch, code).ok()?;
    concurrence(&rho).ok()
}

fn x_route(rho: &TwoQubitDensity) -> Option<f64> {
    if rho.off_x_magnitude() > X_SPARSITY {
        return None;
    }
    XMatrix::from_density(rho).ok().map(|x| concurrence_x(&x))
}

pub fn evaluate(p: GridPoint, route: Route) -> ResultRow {
    let ch = ChannelParams::new(p.eta).ok();
    let amp = RealAmplitude::new(p.alpha).ok();
    let p_e = amp.zip(ch).map(|(a, ch)| flip_prob_single(a, ch));
    let mut row = ResultRow {
        point: p,
        p_e,
        state_p_e: None,
        p_success: None,
        general: None,
        x: None,
        evolution: None,
        max_route_disagreement: None,
        flag: Flag::Degenerate,
    };
    let (Some(ch), Ok(s)) = (ch, TwoModeCatState::symmetric(p.alpha, p.w, p.theta)) else {
        return row;
    };
    let Ok(state_p_e) = flip_prob_state(&s, ch) else {
        return row;
    };
    row.state_p_e = Some(state_p_e);
    row.p_success = success_prob(p.code, state_p_e).ok();

    let wants = |r: Route| route == Route::All || route == r;
    let general = if wants(Route::General) || wants(Route::Xmatrix) {
        general_route(&s, ch, p.code)
    } else {
        None
    };
    if wants(Route::General) {
        row.general = general.as_ref().map(|g| g.0);
    }
    if route == Route::Oracle {
        row.general = oracle_route(&s, ch, p.code);
    }
    if wants(Route::Xmatrix) {
        row.x = general.as_ref().and_then(|g| x_route(&g.1));
    }
    if wants(Route::Evolution) {
        row.evolution = evolved_concurrence(&s, ch, p.code).ok();
    }

    let values: Vec<f64> = [row.general, row.x, row.evolution].into_iter().flatten().collect();
    let expected = match route {
        Route::All => 2,
        _ => 1,
    };
    if values.len() < expected {
        return row;
    }
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let spread = hi - lo;
    row.max_route_disagreement = Some(spread);
    row.flag = if spread >= DISAGREEMENT_LIMIT {
        Flag::Disagreement
    } else {
        Flag::None
    };
    row
}

/// Evaluates every grid point; row order follows [`grid`] whatever the thread count.
pub fn run(cfg: &SweepConfig) -> Result<Vec<ResultRow>, rayon::ThreadPoolBuildError> {
    let points = grid(cfg);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cfg.threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build()?;
    let route = cfg.route;
    Ok(pool.install(|| points.par_iter().map(|&p| evaluate(p, route)).collect()))
}

pub fn write_csv(rows: &[ResultRow], out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "{HEADER}")?;
    for r in rows {
        writeln!(out, "{}", r.to_csv())?;
    }
    out.flush()
}
