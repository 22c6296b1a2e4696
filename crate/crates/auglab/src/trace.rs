//! Trace files: an `N=<int>` header line, then one page id per line.

use auglab_core::paging::{PageId, PageRequestSequence};

use crate::InputError;

/// Blank lines are skipped. Without a header the universe is one past the
/// largest page; an empty file is the empty sequence over one page.
pub fn parse_trace(text: &str) -> Result<PageRequestSequence, InputError> {
    let mut universe = None;
    let mut requests = Vec::new();
    for (number, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if line.is_empty() {
            continue;
        }
        if let Some(value) = line.strip_prefix("N=") {
            if universe.is_some() || !requests.is_empty() {
                return Err(InputError::field("N", format!("header must be the first line (line {number})")));
            }
            let n = value.trim().parse::<u32>().map_err(|_| InputError::field("N", format!("`{value}` is not a page count")))?;
            universe = Some(n);
            continue;
        }
        let page = line.parse::<PageId>().map_err(|_| InputError::field(format!("line {number}"), format!("`{line}` is not a page id")))?;
        requests.push(page);
    }
    match universe {
        Some(n) => Ok(PageRequestSequence::new(requests, n)?),
        None => Ok(PageRequestSequence::from_requests(requests)),
    }
}

pub fn write_trace(z: &PageRequestSequence) -> String {
    let mut out = String::with_capacity(8 + 6 * z.len());
    out.push_str(&format!("N={}\n", z.universe()));
    for page in z.requests() {
        out.push_str(&page.to_string());
        out.push('\n');
    }
    out
}
