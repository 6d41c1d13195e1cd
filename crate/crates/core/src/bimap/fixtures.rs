use super::Bimap;
use crate::error::{Error, Result};
use crate::field::Gf;
use crate::matlin::Mat;

/// Named bimaps: `mult-q`, `sympl2-q`, `sym2-q`, `heis-p`, `tensor-ab-q` (also `tensor-AxB-q`).
pub fn fixture(name: &str) -> Result<Bimap> {
    let bad = || Error::Input(format!("unknown fixture {name}"));
    let (head, q) = name.rsplit_once('-').ok_or_else(bad)?;
    let q: u64 = q.parse().map_err(|_| bad())?;
    let f = Gf::of_order(q)?;
    let one = 1;
    let m1 = f.neg_e(1);
    match head {
        "mult" => Bimap::from_slices(&f, 1, 1, vec![Mat::identity(&f, 1)]),
        "sympl2" | "heis" => {
            if head == "heis" && f.degree() != 1 {
                return Err(Error::NonPrime(q));
            }
            Bimap::from_slices(&f, 2, 2, vec![Mat::from_vec(&f, 2, 2, vec![0, one, m1, 0])])
        }
        "sym2" => Bimap::from_slices(&f, 2, 2, vec![Mat::identity(&f, 2)]),
        _ => {
            let dims = head.strip_prefix("tensor-").ok_or_else(bad)?;
            let (a, b) = match dims.split_once('x') {
                Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
                None if dims.len() == 2 => {
                    let d: Vec<usize> = dims.chars().map(|c| c.to_digit(10).map(|x| x as usize)).collect::<Option<_>>().ok_or_else(bad)?;
                    (d[0], d[1])
                }
                None => return Err(bad()),
            };
            Ok(Bimap::tensor(&f, a, b))
        }
    }
}
