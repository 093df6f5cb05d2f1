use super::{LengthMode, Network, Path};
use crate::error::{Error, Result};

pub const DEFAULT_PATH_BUDGET: usize = 10_000;

/// All simple s-t paths whose mode-length is at most `bound`, in
/// lexicographic order of their edge-id sequences.
///
/// Fails with [`Error::PathBudgetExceeded`] as soon as more than `budget`
/// paths exist; the result is never truncated.
pub fn enumerate_l_bounded_paths(
    net: &Network,
    bound: u64,
    mode: LengthMode,
    budget: usize,
) -> Result<Vec<Path>> {
    let mut search = Search {
        net,
        bound,
        mode,
        budget,
        on_path: vec![false; net.vertex_count()],
        stack: Vec::new(),
        found: Vec::new(),
    };
    search.on_path[net.source()] = true;
    search.extend(net.source(), 0)?;
    Ok(search.found)
}

struct Search<'a> {
    net: &'a Network,
    bound: u64,
    mode: LengthMode,
    budget: usize,
    on_path: Vec<bool>,
    stack: Vec<usize>,
    found: Vec<Path>,
}

impl Search<'_> {
    fn extend(&mut self, at: usize, used: u64) -> Result<()> {
        for &id in self.net.out_edges(at) {
            let e = &self.net.edges()[id];
            let next = used + e.mode_length(self.mode);
            if next > self.bound || self.on_path[e.head] {
                continue;
            }
            self.stack.push(id);
            if e.head == self.net.sink() {
                if self.found.len() == self.budget {
                    return Err(Error::PathBudgetExceeded {
                        budget: self.budget,
                    });
                }
                self.found.push(Path::new(self.stack.clone()));
            } else {
                self.on_path[e.head] = true;
                self.extend(e.head, next)?;
                self.on_path[e.head] = false;
            }
            self.stack.pop();
        }
        Ok(())
    }
}
