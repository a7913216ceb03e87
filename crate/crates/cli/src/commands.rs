use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};

use qprob_core::channel::{choi_from_kraus, verify_cptp, ChoiMatrix, KrausSet};
use qprob_core::kinetics::{evolve_probs_with, oracle_probs_with, Hamiltonian};
use qprob_core::probchannel::{check_channel_prob_constraints, identity_channel_probs, AffineConstants, ChannelProbs};
use qprob_core::state::{
    qubit_bloch_check, qubit_density_from_probs, qubit_probs_from_density, ququart_density_from_probs,
    ququart_probs_from_density, validate_density, ProbVector15, QubitProbs,
};

use crate::args::{ChannelAction, Cli, Command, Conversion};
use crate::error::CliError;
use crate::format::{
    array, matrix_fields, number, object, parse_kraus, parse_matrix, parse_probs, render_matrix, string,
};

pub fn run(cli: Cli) -> Result<(), CliError> {
    let (text, output) = match cli.command {
        Command::State { direction, input, dim, output } => (state(direction, dim, &read_input(&input)?)?, output),
        Command::Channel { action, input, tolerance, output } => {
            (channel(action, tolerance, &read_input(&input)?)?, output)
        }
        Command::Evolve { hamiltonian, t_max, dt, initial, oracle, output } => {
            let h = read_input(&hamiltonian)?;
            let p0 = if initial == "identity" { None } else { Some(read_input(&initial)?) };
            (evolve(&h, p0.as_deref(), t_max, dt, oracle)?, output)
        }
    };
    write_output(&output, &text)
}

pub fn read_input(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    let result = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|source| CliError::Read { path: path.to_string(), source })?;
    Ok(text)
}

pub fn write_output(path: &str, text: &str) -> Result<(), CliError> {
    let result = if path == "-" {
        let mut out = io::stdout().lock();
        out.write_all(text.as_bytes()).and_then(|_| out.flush())
    } else {
        fs::write(path, text)
    };
    result.map_err(|source| CliError::Write { path: path.to_string(), source })
}

/// Density matrix to probabilities and back.
pub fn state(direction: Conversion, dim: usize, input: &str) -> Result<String, CliError> {
    match direction {
        Conversion::ToProbs => {
            let rho = parse_matrix(input)?;
            validate_density(&rho, dim).map_err(CliError::invalid)?;
            let probs = if dim == 2 {
                qubit_probs_from_density(&rho).map_err(CliError::invalid)?.0.to_vec()
            } else {
                ququart_probs_from_density(&rho).map_err(CliError::invalid)?.0.to_vec()
            };
            Ok(object(&[("probs", array(&probs))]))
        }
        Conversion::FromProbs => {
            let probs = parse_probs(input)?;
            let expected = if dim == 2 { 3 } else { 15 };
            if probs.len() != expected {
                return Err(CliError::Invalid(format!(
                    "dimension {dim} needs {expected} probabilities, found {}",
                    probs.len()
                )));
            }
            let rho = if dim == 2 {
                let p = QubitProbs::new(probs[0], probs[1], probs[2]);
                let rho = qubit_density_from_probs(&p).map_err(CliError::invalid)?;
                let check = qubit_bloch_check(&p);
                if !check.valid {
                    return Err(CliError::Invalid(format!(
                        "Bloch restriction violated: sum of (p_i - 1/2)^2 is {} > 1/4",
                        check.margin
                    )));
                }
                rho
            } else {
                let rho = ququart_density_from_probs(&ProbVector15(to_array(&probs))).map_err(CliError::invalid)?;
                validate_density(&rho, 4).map_err(CliError::invalid)?;
                rho
            };
            Ok(render_matrix(&rho))
        }
    }
}

pub fn channel(action: ChannelAction, tol: f64, input: &str) -> Result<String, CliError> {
    let consts = AffineConstants::new();
    match action {
        ChannelAction::Check => {
            let d = parse_choi(input)?;
            let r = verify_cptp(&d, tol);
            Ok(object(&[
                ("hermiticity_defect", number(r.hermiticity_defect)),
                ("trace", number(r.trace_value)),
                ("tp_defect", number(r.tp_defect)),
                ("min_eigenvalue", number(r.min_eigenvalue)),
                ("tolerance", number(r.tolerance)),
                ("verdict", string(r.verdict.as_str())),
            ]))
        }
        ChannelAction::ChoiFromKraus => {
            let k = KrausSet::new(parse_kraus(input)?).map_err(CliError::malformed)?;
            Ok(render_matrix(choi_from_kraus(&k).matrix()))
        }
        ChannelAction::ToProbs => {
            let d = parse_choi(input)?;
            require_cp(&d, tol)?;
            let p = consts.probs_from_choi(&d).map_err(CliError::invalid)?;
            let check = check_channel_prob_constraints(&p, tol);
            Ok(object(&[("probs", array(p.as_array())), ("constraints", array(&check.residuals))]))
        }
        ChannelAction::FromProbs => {
            let probs = parse_probs(input)?;
            if probs.len() != 15 {
                return Err(CliError::Malformed(format!("a channel needs 15 probabilities, found {}", probs.len())));
            }
            let p = ProbVector15(to_array(&probs));
            p.check_range().map_err(CliError::invalid)?;
            let p = ChannelProbs(p);
            let d = consts.choi_from_probs(&p);
            require_cp(&d, tol)?;
            let check = check_channel_prob_constraints(&p, tol);
            let mut fields = matrix_fields(d.matrix());
            fields.push(("constraints", array(&check.residuals)));
            Ok(object(&fields))
        }
    }
}

/// CSV trajectory with header `t,p1,...,p15`, optionally followed by the
/// oracle columns `o1..o15` and a closing `# max_dev=` comment.
pub fn evolve(hamiltonian: &str, initial: Option<&str>, t_max: f64, dt: f64, oracle: bool) -> Result<String, CliError> {
    let m = parse_matrix(hamiltonian)?;
    if m.rows() != 2 {
        return Err(CliError::Malformed(format!("Hamiltonian must be 2x2, found {}x{}", m.rows(), m.cols())));
    }
    let h = Hamiltonian::new(m).map_err(CliError::malformed)?;
    let p0 = match initial {
        None => identity_channel_probs(),
        Some(text) => {
            let probs = parse_probs(text)?;
            if probs.len() != 15 {
                return Err(CliError::Malformed(format!(
                    "initial channel needs 15 probabilities, found {}",
                    probs.len()
                )));
            }
            let p = ProbVector15(to_array(&probs));
            p.check_range().map_err(CliError::invalid)?;
            ChannelProbs(p)
        }
    };

    let consts = AffineConstants::new();
    let traj = evolve_probs_with(&consts, &h, &p0, t_max, dt).map_err(CliError::invalid)?;

    let mut out = String::from("t");
    for i in 1..=15 {
        write!(out, ",p{i}").unwrap();
    }
    if oracle {
        for i in 1..=15 {
            write!(out, ",o{i}").unwrap();
        }
    }
    out.push('\n');

    let mut max_dev = 0.0_f64;
    for (t, p) in &traj.samples {
        out.push_str(&number(*t));
        for x in p.0 {
            write!(out, ",{}", number(x)).unwrap();
        }
        if oracle {
            let exact = oracle_probs_with(&consts, &h, *t).map_err(CliError::invalid)?;
            max_dev = max_dev.max(p.max_abs_diff(&exact.0));
            for x in exact.as_array() {
                write!(out, ",{}", number(*x)).unwrap();
            }
        }
        out.push('\n');
    }
    if oracle {
        writeln!(out, "# max_dev={}", number(max_dev)).unwrap();
    }
    Ok(out)
}

fn parse_choi(input: &str) -> Result<ChoiMatrix, CliError> {
    ChoiMatrix::new(parse_matrix(input)?).map_err(CliError::malformed)
}

fn require_cp(d: &ChoiMatrix, tol: f64) -> Result<(), CliError> {
    let report = verify_cptp(d, tol);
    if report.verdict.is_cp() {
        Ok(())
    } else {
        Err(CliError::Invalid(format!(
            "map is not completely positive (min eigenvalue {}, hermiticity defect {})",
            number(report.min_eigenvalue),
            number(report.hermiticity_defect)
        )))
    }
}

fn to_array(probs: &[f64]) -> [f64; 15] {
    let mut p = [0.0; 15];
    p.copy_from_slice(probs);
    p
}
