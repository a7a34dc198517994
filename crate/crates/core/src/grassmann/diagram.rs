use super::{GrassmannContext, Partition};
use crate::error::Result;

/// ASCII picture of a partition in the `(k+1) x (n-k)` box.
///
/// Each cell is two characters: `"# "` for a cell of `lambda`, `". "` for an
/// empty cell, `"* "` for a cell of `overlay` (drawn over `lambda`). Rows end
/// in `'\n'` with the trailing space stripped.
pub fn render_diagram(
    ctx: &GrassmannContext,
    lambda: &Partition,
    overlay: Option<&Partition>,
) -> Result<String> {
    ctx.check_fits(lambda)?;
    if let Some(o) = overlay {
        ctx.check_fits(o)?;
    }
    let mut out = String::with_capacity(ctx.rows() * (2 * ctx.cols() + 1));
    for r in 0..ctx.rows() {
        let mut row = String::with_capacity(2 * ctx.cols());
        for c in 0..ctx.cols() {
            let cell = match overlay {
                Some(o) if c < o.part(r) => '*',
                _ if c < lambda.part(r) => '#',
                _ => '.',
            };
            row.push(cell);
            row.push(' ');
        }
        out.push_str(row.trim_end());
        out.push('\n');
    }
    Ok(out)
}
