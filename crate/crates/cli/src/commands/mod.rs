//! One handler per subcommand. Each returns a [`Report`] and an exit code.

use std::collections::BTreeSet;

use oneadic_core::defring::parse_index_set;

use crate::args::{Cli, Command};
use crate::report::Report;
use crate::{acceptance, exit, CliError};

mod f1;
mod galois;
mod single;
pub mod sweep;

pub type Handled = Result<(Report, i32), CliError>;

pub fn dispatch(cli: &Cli) -> Handled {
    let g = &cli.global;
    match &cli.command {
        Command::Gene(a) => single::gene(a),
        Command::Weights(a) => single::weights(a),
        Command::Kisin(a) => single::kisin(a, g),
        Command::Defring(a) => single::defring(a),
        Command::Serre(a) => single::serre(a, g),
        Command::Tame(a) => single::tame(a),
        Command::CardGl(a) => single::card_gl(a, g),
        Command::F1(c) => f1::run(c, g),
        Command::Galois(c) => galois::run(c, g),
        Command::Sweep(c) => sweep::run(c, g),
        Command::Acceptance(a) => acceptance::command(a, g),
    }
}

pub(crate) fn ok(report: Report) -> Handled {
    Ok((report, exit::OK))
}

/// `0,2` or the bitmask form `0b101`; positions are checked against `f`.
pub(crate) fn parse_jii(s: &str, f: usize) -> Result<BTreeSet<usize>, CliError> {
    let set = match s.trim().strip_prefix("0b") {
        Some(bits) => {
            let mask = u64::from_str_radix(bits, 2)
                .map_err(|_| CliError::invalid(format!("bad bitmask {s:?}")))?;
            (0..64).filter(|k| mask >> k & 1 == 1).collect()
        }
        None => parse_index_set(s)?,
    };
    oneadic_core::defring::Shape::from_jii(f, &set)?;
    Ok(set)
}

pub(crate) fn parse_int_list(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::invalid(format!("bad integer {t:?}")))
        })
        .collect()
}

pub(crate) fn set_label(s: &BTreeSet<usize>) -> String {
    let parts: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub(crate) fn tuple_label<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jii_forms() {
        assert_eq!(parse_jii("0,2", 3).unwrap(), [0, 2].into_iter().collect());
        assert_eq!(parse_jii("0b101", 3).unwrap(), [0, 2].into_iter().collect());
        assert_eq!(parse_jii("", 3).unwrap(), BTreeSet::new());
        assert_eq!(parse_jii("3", 3).unwrap_err().code, exit::INVALID);
        assert_eq!(parse_jii("0b2", 3).unwrap_err().code, exit::INVALID);
    }
}
