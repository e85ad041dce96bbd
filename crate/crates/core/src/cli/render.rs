//! Inverse of [`parse_algebra`](super::parse_algebra).

use std::fmt::Write;

use num_traits::{One, Signed};

use crate::liecore::LieAlgebra;

/// Serializes an algebra in the file format. Only nonzero brackets with
/// `i < j` are written.
pub fn render(l: &LieAlgebra) -> String {
    let names = l.names();
    let mut out = format!("dim {}\nbasis", l.dim());
    for name in names {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for (&(i, j), terms) in l.brackets() {
        if terms.is_empty() {
            continue;
        }
        write!(out, "[{},{}] = ", names[i], names[j]).unwrap();
        for (pos, (k, c)) in terms.iter().enumerate() {
            let abs = c.abs();
            let coeff = if abs.is_one() {
                String::new()
            } else {
                format!("{abs} ")
            };
            let sign = match (pos, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            write!(out, "{sign}{coeff}{}", names[*k]).unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::cli::parse_algebra;

    #[test]
    fn sl2_text() {
        assert_eq!(
            render(&catalog::sl2()),
            "dim 3\nbasis e h f\n[e,h] = -2 e\n[e,f] = h\n[h,f] = -2 f\n"
        );
        assert_eq!(render(&catalog::abelian(0)), "dim 0\nbasis\n");
    }

    #[test]
    fn round_trip_catalog() {
        for name in [
            "abelian(3)",
            "nonabelian2",
            "heisenberg",
            "sl2",
            "sl3",
            "gl2",
            "so3",
            "borel2",
            "upper_triangular(3)",
            "strictly_upper(4)",
        ] {
            let l = catalog::builtin(name).unwrap().algebra;
            assert_eq!(parse_algebra(&render(&l)).unwrap(), l, "{name}");
        }
    }
}
