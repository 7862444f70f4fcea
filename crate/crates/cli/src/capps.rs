use anyhow::Result;
use regspec::capp::{Enumerator, SignatureClass};

use crate::cli::CappsArgs;
use crate::table::{Cell, Table};
use crate::{Context, Outcome};

pub fn run(ctx: &Context, args: &CappsArgs) -> Result<Outcome> {
    let enumerator = Enumerator::with_max_length(ctx.max_length);
    let filter = args
        .signature
        .as_deref()
        .map(|s| s.parse::<SignatureClass>())
        .transpose()?;

    // fail on a cap breach before writing anything
    let counts = enumerator.count_by_signature(args.length)?;
    if !args.length.is_multiple_of(2) {
        eprintln!("note: P_k empty for odd k (length {})", args.length);
    }
    let triples = if args.length.is_multiple_of(2) {
        enumerator.triples(args.length)?.len()
    } else {
        0
    };
    let two_to_one = triples == 2 * counts.one_four;

    if args.summary {
        let mut t = Table::new(vec!["quantity", "value"]);
        let mut row = |k: String, v: String| t.push(vec![Cell::Text(k), Cell::Text(v)]);
        row("length".into(), args.length.to_string());
        row("total".into(), counts.total.to_string());
        for c in &counts.classes {
            row(c.signature.to_string(), c.count.to_string());
        }
        row("all_twos".into(), counts.all_twos.to_string());
        row("one_four".into(), counts.one_four.to_string());
        row("without_single".into(), counts.without_single.to_string());
        row("triples".into(), triples.to_string());
        row("two_to_one".into(), if two_to_one { "pass" } else { "fail" }.into());
        ctx.emit(&t)?;
    } else {
        let mut t = Table::new(vec!["pattern", "signature", "multiplicity_roots"]);
        for record in enumerator.records(args.length)? {
            if filter.as_ref().is_some_and(|f| record.signature.class() != *f) {
                continue;
            }
            t.push(vec![
                Cell::Text(record.pattern.to_string()),
                Cell::List(record.signature.0.iter().map(|&n| Cell::Int(n.into())).collect()),
                Cell::List(record.multiplicity_roots.iter().map(|&a| Cell::Int(a.into())).collect()),
            ]);
        }
        let classes: Vec<String> = counts
            .classes
            .iter()
            .map(|c| format!("{}:{}", c.signature, c.count))
            .collect();
        eprintln!(
            "{} patterns ({} shown); {}; |P2|={} |P4|={} |T|={}; |T| = 2|P4|: {}",
            counts.total,
            t.rows.len(),
            classes.join(" "),
            counts.all_twos,
            counts.one_four,
            triples,
            if two_to_one { "pass" } else { "fail" }
        );
        ctx.emit(&t)?;
    }
    Ok(if two_to_one { Outcome::Success } else { Outcome::GateFailed })
}
