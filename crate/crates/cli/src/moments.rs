use anyhow::{bail, Result};
use regspec::capp::Enumerator;
use regspec::ensemble::WeightSpec;
use regspec::moments::{MomentEngine, MomentValue};
use regspec::rational::{format_rational, Rational};
use regspec::spectra::kesten_moment_numeric;

use crate::cli::MomentsCommand;
use crate::table::{Cell, Table};
use crate::{Context, Outcome, UsageError};

fn orders(list: &[usize]) -> Result<Vec<u32>> {
    list.iter()
        .map(|&o| u32::try_from(o).map_err(|_| UsageError(format!("order {o} is too large")).into()))
        .collect()
}

fn value_row(d: u64, order: u32, value: &Rational) -> Vec<Cell> {
    let v = MomentValue::new(d, order, value);
    vec![
        Cell::Int(d.into()),
        Cell::Int(order.into()),
        Cell::Text(v.value_num.clone()),
        Cell::Text(v.value_den.clone()),
        Cell::Exact(v.as_fraction()),
    ]
}

const VALUE_COLUMNS: [&str; 5] = ["d", "order", "value_num", "value_den", "value"];

fn exact_list(values: &[Rational]) -> Cell {
    Cell::List(values.iter().map(|c| Cell::Exact(format_rational(c))).collect())
}

pub fn run(ctx: &Context, kind: &MomentsCommand) -> Result<Outcome> {
    let engine = MomentEngine::new(Enumerator::with_max_length(ctx.max_length));
    let table = match kind {
        MomentsCommand::Expand { order, d, weights } => {
            let spec: WeightSpec = weights.parse()?;
            let mut t = Table::new(VALUE_COLUMNS.to_vec());
            for &d in &d.0 {
                for o in orders(&order.0)? {
                    let value = engine.moment_expansion(o, d as u64, &spec.moments(o))?;
                    t.push(value_row(d as u64, o, &value));
                }
            }
            t
        }
        MomentsCommand::Symbolic { order, weights: None } => {
            let mut t = Table::new(vec!["order", "signature", "monomial", "patterns", "coefficients", "polynomial"]);
            for o in orders(&order.0)? {
                if o % 2 == 1 {
                    // validates the length limit
                    engine.moment_expansion_symbolic(o, &regspec::moments::MomentSequence::all_ones(o))?;
                    continue;
                }
                for term in engine.table(o)?.terms() {
                    t.push(vec![
                        Cell::Int(o.into()),
                        Cell::Text(term.class.to_string()),
                        Cell::Text(term.monomial.clone()),
                        Cell::Int(term.patterns as i128),
                        exact_list(term.coefficient.coefficients()),
                        Cell::Text(term.coefficient.to_string()),
                    ]);
                }
            }
            t
        }
        MomentsCommand::Symbolic { order, weights: Some(weights) } => {
            let spec: WeightSpec = weights.parse()?;
            let mut t = Table::new(vec!["order", "weights", "coefficients", "polynomial"]);
            for o in orders(&order.0)? {
                let poly = engine.moment_expansion_symbolic(o, &spec.moments(o))?;
                t.push(vec![
                    Cell::Int(o.into()),
                    Cell::Text(spec.to_string()),
                    exact_list(poly.coefficients()),
                    Cell::Text(poly.to_string()),
                ]);
            }
            t
        }
        MomentsCommand::Eigen { d, max } => {
            let max = orders(&[*max])?[0];
            let mut t = Table::new(VALUE_COLUMNS.to_vec());
            for &d in &d.0 {
                let table = engine.eigenmoments(d as u64, max)?;
                for (o, v) in table.even_moments() {
                    t.push(value_row(d as u64, o, v));
                }
            }
            t
        }
        MomentsCommand::Kesten { d, order, numeric } => {
            let mut columns = VALUE_COLUMNS.to_vec();
            if *numeric {
                columns.push("numeric");
            }
            let mut t = Table::new(columns);
            for &d in &d.0 {
                for o in orders(&order.0)? {
                    let mut row = value_row(d as u64, o, &engine.kesten_moment_exact(d as u64, o)?);
                    if *numeric {
                        row.push(Cell::Float(kesten_moment_numeric(d as u64, o)?));
                    }
                    t.push(row);
                }
            }
            t
        }
        MomentsCommand::Deviation { d, order } => {
            let os = orders(&order.0)?;
            if os.iter().any(|o| o % 2 == 1) {
                bail!(UsageError("deviation orders must be even".into()));
            }
            let mut t = Table::new(vec!["d", "order", "eigenmoment", "semicircle", "scaled_deviation"]);
            for row in engine.deviation_table(d.0.iter().map(|&d| d as u64), &os)? {
                t.push(vec![
                    Cell::Int(row.d.into()),
                    Cell::Int(row.order.into()),
                    Cell::Exact(format_rational(&row.eigenmoment)),
                    Cell::Exact(format_rational(&row.semicircle)),
                    Cell::Exact(format_rational(&row.scaled_deviation)),
                ]);
            }
            t
        }
    };
    ctx.emit(&table)?;
    Ok(Outcome::Success)
}
