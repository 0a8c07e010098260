use alloc::format;

use crate::codes::Code;
use crate::{ColorSet, Error, Result, SetColoring, MAX_COLORS};

/// Product of a graph coloring with itself over the coordinates of a code.
///
/// The base is an `(a, b)`-coloring of `K_q` and the code lives in `[q]^m`. Vertices of
/// the output are codewords; edge `xy` receives color `i*a + c` for every coordinate
/// `i` with `x_i != y_i` and every `c` in the base color set of `x_i y_i`. An edge
/// therefore carries `b * dist(x, y) >= b * d` colors, and a monochromatic `K_n` in color
/// `i*a + c` would project to one in color `c` of the base.
///
/// The output is slack with `r = m*a` and `s = d*b`.
pub fn product_coloring(base: &SetColoring, code: &Code) -> Result<SetColoring> {
    if base.uniformity() != 2 {
        return Err(Error::Precondition(
            "product base must be a graph coloring".into(),
        ));
    }
    if code.alphabet_size() as usize != base.num_vertices() {
        return Err(Error::Precondition(format!(
            "code alphabet {} must equal the base vertex count {}",
            code.alphabet_size(),
            base.num_vertices()
        )));
    }
    if code.len() < 2 {
        return Err(Error::Precondition(
            "product needs a code with at least two words".into(),
        ));
    }
    let a = base.num_colors();
    let m = code.length();
    if a * m > MAX_COLORS {
        return Err(Error::PaletteOverflow { colors: a * m });
    }
    let s = code.claimed_distance() * base.colors_per_edge();
    let words = code.words();
    SetColoring::from_fn(2, code.len(), a * m, s, true, |e| {
        let (x, y) = (&words[e[0]], &words[e[1]]);
        let mut set = ColorSet::EMPTY;
        for i in 0..m {
            if x[i] != y[i] {
                let base_set = base.pair(x[i] as usize, y[i] as usize);
                set = set.union(ColorSet(base_set.0 << (i * a)));
            }
        }
        set
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::{find_mono_clique, Budget};
    use crate::codes::{greedy_gv_code, hamming_distance, DEFAULT_ENUMERATION_LIMIT};

    #[test]
    fn length_one_code_is_identity() {
        let p = SetColoring::pentagon();
        let all = greedy_gv_code(5, 1, 1, DEFAULT_ENUMERATION_LIMIT).unwrap();
        let out = product_coloring(&p, &all).unwrap();
        assert_eq!(out.edge_sets(), p.edge_sets());
    }

    #[test]
    fn pentagon_square_has_no_triangle() {
        let p = SetColoring::pentagon();
        let all = greedy_gv_code(5, 2, 1, DEFAULT_ENUMERATION_LIMIT).unwrap();
        let out = product_coloring(&p, &all).unwrap();
        assert_eq!((out.num_vertices(), out.num_colors()), (25, 4));
        assert!(out.validate().is_ok());
        for (e, set) in out.edges() {
            let d = hamming_distance(&all.words()[e[0]], &all.words()[e[1]]).unwrap();
            assert_eq!(set.len(), d);
        }
        assert!(find_mono_clique(&out, 3, Budget::UNLIMITED)
            .unwrap()
            .is_none());
        let trimmed = out.trim_to_exact().unwrap();
        assert!(find_mono_clique(&trimmed, 3, Budget::UNLIMITED)
            .unwrap()
            .is_none());
    }

    #[test]
    fn rejects_mismatched_alphabet() {
        let p = SetColoring::pentagon();
        let code = greedy_gv_code(4, 2, 1, DEFAULT_ENUMERATION_LIMIT).unwrap();
        assert!(product_coloring(&p, &code).is_err());
    }

    #[test]
    fn palette_overflow() {
        let p = SetColoring::pentagon();
        let code = Code::new(
            5,
            65,
            65,
            alloc::vec![alloc::vec![0; 65], alloc::vec![1; 65]],
        )
        .unwrap();
        assert!(matches!(
            product_coloring(&p, &code),
            Err(Error::PaletteOverflow { colors: 130 })
        ));
    }
}
