use super::TreeDecomposition;
use crate::error::{Error, Result};

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::Parse { line, msg: format!("missing {what}") })?
        .parse()
        .map_err(|_| Error::Parse { line, msg: format!("bad {what}") })
}

/// Reads a PACE `.td` file. Comment lines start with `c`.
pub fn parse_pace(text: &str) -> Result<TreeDecomposition> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let first = match toks.next() {
            None | Some("c") => continue,
            Some(t) => t,
        };
        match first {
            "s" => {
                if toks.next() != Some("td") {
                    return Err(Error::Parse { line, msg: "expected `s td`".into() });
                }
                let nb = parse_num(toks.next(), line, "bag count")?;
                let w = parse_num(toks.next(), line, "bag size")?;
                let n = parse_num(toks.next(), line, "vertex count")?;
                header = Some((nb, w, n));
                bags = vec![None; nb];
            }
            "b" => {
                let (nb, _, n) = header.ok_or(Error::Parse { line, msg: "bag before header".into() })?;
                let id = parse_num(toks.next(), line, "bag id")?;
                if id == 0 || id > nb {
                    return Err(Error::Parse { line, msg: format!("bag id {id} out of range") });
                }
                let mut bag = Vec::new();
                for t in toks {
                    let v = parse_num(Some(t), line, "vertex")?;
                    if v == 0 || v > n {
                        return Err(Error::Parse { line, msg: format!("vertex {v} out of range") });
                    }
                    bag.push(v - 1);
                }
                bags[id - 1] = Some(bag);
            }
            _ => {
                let (nb, _, _) = header.ok_or(Error::Parse { line, msg: "edge before header".into() })?;
                let a = parse_num(Some(first), line, "tree edge")?;
                let b = parse_num(toks.next(), line, "tree edge")?;
                if a == 0 || b == 0 || a > nb || b > nb || toks.next().is_some() {
                    return Err(Error::Parse { line, msg: "bad tree edge".into() });
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let (_, w, n) = header.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or(Error::Parse { line: 0, msg: format!("bag {} missing", i + 1) }))
        .collect::<Result<_>>()?;
    let td = TreeDecomposition::new(n, bags, edges);
    if td.max_bag() != w {
        return Err(Error::Parse { line: 0, msg: "header bag size does not match bags".into() });
    }
    Ok(td)
}
