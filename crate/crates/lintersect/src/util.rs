//! Small shared helpers.

/// Visits every `r`-combination of `items` in lexicographic order of index
/// tuples. The callback returns `false` to stop early; the function returns
/// `false` iff the visit was stopped.
pub(crate) fn for_each_combination<T: Copy>(
    items: &[T],
    r: usize,
    f: &mut impl FnMut(&[T]) -> bool,
) -> bool {
    fn rec<T: Copy>(
        items: &[T],
        r: usize,
        start: usize,
        cur: &mut Vec<T>,
        f: &mut impl FnMut(&[T]) -> bool,
    ) -> bool {
        if cur.len() == r {
            return f(cur);
        }
        let remaining = r - cur.len();
        let mut i = start;
        while i + remaining <= items.len() {
            cur.push(items[i]);
            if !rec(items, r, i + 1, cur, f) {
                return false;
            }
            cur.pop();
            i += 1;
        }
        true
    }
    if r > items.len() {
        return true;
    }
    let mut cur = Vec::with_capacity(r);
    rec(items, r, 0, &mut cur, f)
}
