//! Graph input: graph6 strings, edge-list files, and generator specs.

use chromaloc::graph::{self, SimpleGraph};
use chromaloc::{graph6, Error, Result};

/// Parse a generator spec like `cycle:5`, `petersen`, `torus:2,4` or
/// `random-regular:3,16,5,42` (d, n, min girth, seed).
pub fn generate(spec: &str) -> Result<SimpleGraph> {
    let (family, params) = match spec.split_once(':') {
        Some((f, p)) => (f, p),
        None => (spec, ""),
    };
    let nums: Vec<usize> = if params.is_empty() {
        Vec::new()
    } else {
        params
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Malformed(format!("bad generator parameter {s:?}")))
            })
            .collect::<Result<_>>()?
    };
    let arity = |want: usize| -> Result<()> {
        if nums.len() == want {
            Ok(())
        } else {
            Err(Error::Malformed(format!(
                "generator {family} takes {want} parameter(s), got {}",
                nums.len()
            )))
        }
    };
    Ok(match family {
        "path" => {
            arity(1)?;
            graph::path(nums[0])
        }
        "cycle" => {
            arity(1)?;
            if nums[0] < 3 {
                return Err(Error::Malformed("cycle needs at least 3 vertices".into()));
            }
            graph::cycle(nums[0])
        }
        "complete" => {
            arity(1)?;
            graph::complete(nums[0])
        }
        "petersen" => {
            arity(0)?;
            graph::petersen()
        }
        "box" => {
            arity(2)?;
            graph::grid_box(nums[0], nums[1])
        }
        "torus" => {
            arity(2)?;
            if nums[1] < 3 {
                return Err(Error::Malformed("torus side must be at least 3".into()));
            }
            graph::torus(nums[0], nums[1])
        }
        "tube" => {
            arity(1)?;
            if nums[0] == 0 {
                return Err(Error::Malformed("tube length must be at least 1".into()));
            }
            graph::tube(nums[0])
        }
        "random-regular" => {
            arity(4)?;
            graph::random_regular(nums[0], nums[1], nums[2], nums[3] as u64)?
        }
        other => return Err(Error::Malformed(format!("unknown generator family {other:?}"))),
    })
}

/// Load from the three exclusive flag-style sources.
pub fn load(g6: &Option<String>, edges: &Option<String>, gen: &Option<String>) -> Result<SimpleGraph> {
    match (g6, edges, gen) {
        (Some(code), None, None) => graph6::parse_graph6(code),
        (None, Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Malformed(format!("cannot read {path}: {e}")))?;
            graph::parse_edge_list_text(&text)
        }
        (None, None, Some(spec)) => generate(spec),
        _ => Err(Error::Malformed(
            "provide exactly one of --g6, --edges, --gen".into(),
        )),
    }
}

/// Positional graph spec `g6:CODE`, `gen:FAMILY:PARAMS` or `edges:PATH`.
pub fn load_spec(spec: &str) -> Result<SimpleGraph> {
    match spec.split_once(':') {
        Some(("g6", rest)) => graph6::parse_graph6(rest),
        Some(("gen", rest)) => generate(rest),
        Some(("edges", rest)) => {
            let text = std::fs::read_to_string(rest)
                .map_err(|e| Error::Malformed(format!("cannot read {rest}: {e}")))?;
            graph::parse_edge_list_text(&text)
        }
        _ => Err(Error::Malformed(format!(
            "graph spec {spec:?} must start with g6:, gen: or edges:"
        ))),
    }
}
