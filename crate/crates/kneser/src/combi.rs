//! Small enumeration helpers shared across modules.

/// Calls `f` on every k-element subset of 0..n in lexicographic order, until
/// `f` returns false. Returns false iff the walk was aborted.
pub(crate) fn each_combination(
    n: usize,
    k: usize,
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if k > n {
        return true;
    }
    if k == 0 {
        return f(&[]);
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        if !f(&c) {
            return false;
        }
        let mut i = k - 1;
        loop {
            if c[i] < i + n - k {
                break;
            }
            if i == 0 {
                return true;
            }
            i -= 1;
        }
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Collects all k-element subsets of 0..n in lexicographic order.
#[cfg(test)]
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    each_combination(n, k, &mut |c| {
        out.push(c.to_vec());
        true
    });
    out
}

/// Calls `f` on every way to write `total` as an ordered sum of `parts`
/// non-negative integers, in descending lexicographic order, until `f`
/// returns false. Returns false iff the walk was aborted.
pub(crate) fn each_composition_desc(
    total: usize,
    parts: usize,
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    assert!(parts >= 1);
    fn rec(
        buf: &mut Vec<usize>,
        pos: usize,
        rem: usize,
        parts: usize,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if pos == parts - 1 {
            buf[pos] = rem;
            return f(buf);
        }
        for g in (0..=rem).rev() {
            buf[pos] = g;
            if !rec(buf, pos + 1, rem - g, parts, f) {
                return false;
            }
        }
        true
    }
    let mut buf = vec![0usize; parts];
    rec(&mut buf, 0, total, parts, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3), Vec::<Vec<usize>>::new());
    }

    #[test]
    fn compositions_descend() {
        let mut seen = Vec::new();
        each_composition_desc(3, 2, &mut |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(
            seen,
            vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]
        );
    }

    #[test]
    fn composition_count() {
        // C(total + parts - 1, parts - 1) compositions
        let mut count = 0usize;
        each_composition_desc(5, 4, &mut |_| {
            count += 1;
            true
        });
        assert_eq!(count, 56);
    }

    #[test]
    fn early_abort() {
        let mut count = 0usize;
        let finished = each_combination(5, 2, &mut |_| {
            count += 1;
            count < 3
        });
        assert!(!finished);
        assert_eq!(count, 3);
    }
}
