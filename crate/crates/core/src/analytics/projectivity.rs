use crate::conllu::Sentence;

/// Arcs as `(left, right)` spans over word positions, the root arc
/// starting at position 0.
fn spans(s: &Sentence) -> Vec<(usize, usize)> {
    s.words()
        .filter_map(|w| {
            let id = w.id.first();
            w.head.map(|h| (h.min(id), h.max(id)))
        })
        .collect()
}

/// True when no two arcs cross if drawn above the sentence, with the
/// root attached from an artificial position 0 to the left of word 1.
///
/// Arcs are nested intervals exactly when no interval starts inside an
/// open one and ends beyond it; a sweep over intervals sorted by
/// (left ascending, right descending) with a stack of open intervals
/// checks this in O(n log n).
pub fn is_projective(s: &Sentence) -> bool {
    let mut arcs = spans(s);
    arcs.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut open: Vec<(usize, usize)> = Vec::new();
    for (left, right) in arcs {
        while open.last().is_some_and(|&(_, r)| r <= left) {
            open.pop();
        }
        if open.last().is_some_and(|&(_, r)| r < right) {
            return false;
        }
        open.push((left, right));
    }
    true
}

/// Every crossing pair of arcs, as dependent word IDs.
pub fn crossing_arcs(s: &Sentence) -> Vec<(usize, usize)> {
    let arcs: Vec<(usize, (usize, usize))> = s
        .words()
        .filter_map(|w| {
            let id = w.id.first();
            w.head.map(|h| (id, (h.min(id), h.max(id))))
        })
        .collect();
    let inside = |x: usize, (l, r): (usize, usize)| l < x && x < r;
    let mut out = Vec::new();
    for (i, &(a, sa)) in arcs.iter().enumerate() {
        for &(b, sb) in &arcs[i + 1..] {
            if inside(sb.0, sa) != inside(sb.1, sa)
                && !(sb.0 == sa.0 || sb.0 == sa.1 || sb.1 == sa.0 || sb.1 == sa.1)
            {
                out.push((a, b));
            }
        }
    }
    out
}
