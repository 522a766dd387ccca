use super::{ShLeibniz2, ShLeibnizOps};
use crate::algebra::Element;
use crate::check::{run_check, Family, Table2, Table3};
use crate::error::Result;
use crate::report::{CheckRecord, VerifyReport};

/// Wraps an algebra so that brackets with a zero argument are not evaluated.
struct Skip<'a, O>(&'a O);

impl<O: ShLeibnizOps> Skip<'_, O> {
    fn d(&self, m: &O::V1) -> O::V0 {
        if m.is_zero() {
            self.0.zero0()
        } else {
            self.0.d(m)
        }
    }

    fn l2_00(&self, x: &O::V0, y: &O::V0) -> O::V0 {
        if x.is_zero() || y.is_zero() {
            self.0.zero0()
        } else {
            self.0.l2_00(x, y)
        }
    }

    fn l2_01(&self, x: &O::V0, m: &O::V1) -> O::V1 {
        if x.is_zero() || m.is_zero() {
            self.0.zero1()
        } else {
            self.0.l2_01(x, m)
        }
    }

    fn l2_10(&self, m: &O::V1, x: &O::V0) -> O::V1 {
        if x.is_zero() || m.is_zero() {
            self.0.zero1()
        } else {
            self.0.l2_10(m, x)
        }
    }

    fn l3(&self, x: &O::V0, y: &O::V0, z: &O::V0) -> O::V1 {
        if self.0.l3_vanishes() || x.is_zero() || y.is_zero() || z.is_zero() {
            self.0.zero1()
        } else {
            self.0.l3(x, y, z)
        }
    }
}

/// Signed sum of terms, skipping zeros.
pub(crate) fn signed_sum<E: Element>(zero: E, terms: &[(i8, E)]) -> E {
    let mut acc: Option<E> = None;
    for (sign, t) in terms {
        if t.is_zero() {
            continue;
        }
        let t = if *sign < 0 { t.neg() } else { t.clone() };
        acc = Some(match acc {
            None => t,
            Some(a) => a.add(&t),
        });
    }
    acc.unwrap_or(zero)
}

/// Checks every identity of a 2-term sh Leibniz algebra on all tuples drawn
/// from `fam0` (degree 0) and `fam1` (degree 1).
///
/// Residuals are "left side minus right side" of each identity as usually
/// written, so the bracket side of (d) and (e1)-(e3) minus the `l3` side.
pub fn verify_on_families<O: ShLeibnizOps>(
    ops: &O,
    fam0: &Family<O::V0>,
    fam1: &Family<O::V1>,
) -> VerifyReport {
    let s = Skip(ops);
    let (x0, x1) = (&fam0.items, &fam1.items);
    let (n0, n1) = (x0.len(), x1.len());
    let (lab0, lab1) = (&fam0.labels[..], &fam1.labels[..]);

    let dm: Vec<O::V0> = crate::exec::map_range(n1, |i| s.d(&x1[i]));
    let b00 = Table2::build(n0, n0, |i, j| s.l2_00(&x0[i], &x0[j]));
    let b01 = Table2::build(n0, n1, |i, m| s.l2_01(&x0[i], &x1[m]));
    let b10 = Table2::build(n1, n0, |m, i| s.l2_10(&x1[m], &x0[i]));
    let l3 = if ops.l3_vanishes() {
        None
    } else {
        Some(Table3::build(n0, |i, j, k| s.l3(&x0[i], &x0[j], &x0[k])))
    };
    let l3_at = |i: usize, j: usize, k: usize| -> O::V1 {
        l3.as_ref().map_or_else(|| ops.zero1(), |t| t.get(i, j, k).clone())
    };

    let mut report = VerifyReport::new();

    report.push(run_check("(a)", "d l2(x,m) = l2(x,dm)", &[n0, n1], &[lab0, lab1], |t| {
        let (x, m) = (t[0], t[1]);
        s.d(b01.get(x, m)).sub(&s.l2_00(&x0[x], &dm[m]))
    }));

    report.push(run_check("(b)", "d l2(m,x) = l2(dm,x)", &[n1, n0], &[lab1, lab0], |t| {
        let (m, x) = (t[0], t[1]);
        s.d(b10.get(m, x)).sub(&s.l2_00(&dm[m], &x0[x]))
    }));

    report.push(run_check("(c)", "l2(dm,n) = l2(m,dn)", &[n1, n1], &[lab1, lab1], |t| {
        let (m, n) = (t[0], t[1]);
        s.l2_01(&dm[m], &x1[n]).sub(&s.l2_10(&x1[m], &dm[n]))
    }));

    report.push(run_check(
        "(d)",
        "l2(x,l2(y,z)) - l2(l2(x,y),z) - l2(y,l2(x,z)) = d l3(x,y,z)",
        &[n0, n0, n0],
        &[lab0, lab0, lab0],
        |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            signed_sum(
                ops.zero0(),
                &[
                    (1, s.l2_00(&x0[x], b00.get(y, z))),
                    (-1, s.l2_00(b00.get(x, y), &x0[z])),
                    (-1, s.l2_00(&x0[y], b00.get(x, z))),
                    (-1, s.d(&l3_at(x, y, z))),
                ],
            )
        },
    ));

    report.push(run_check(
        "(e1)",
        "l2(x,l2(y,m)) - l2(l2(x,y),m) - l2(y,l2(x,m)) = l3(x,y,dm)",
        &[n0, n0, n1],
        &[lab0, lab0, lab1],
        |t| {
            let (x, y, m) = (t[0], t[1], t[2]);
            signed_sum(
                ops.zero1(),
                &[
                    (1, s.l2_01(&x0[x], b01.get(y, m))),
                    (-1, s.l2_01(b00.get(x, y), &x1[m])),
                    (-1, s.l2_01(&x0[y], b01.get(x, m))),
                    (-1, s.l3(&x0[x], &x0[y], &dm[m])),
                ],
            )
        },
    ));

    report.push(run_check(
        "(e2)",
        "l2(x,l2(m,y)) - l2(l2(x,m),y) - l2(m,l2(x,y)) = l3(x,dm,y)",
        &[n0, n1, n0],
        &[lab0, lab1, lab0],
        |t| {
            let (x, m, y) = (t[0], t[1], t[2]);
            signed_sum(
                ops.zero1(),
                &[
                    (1, s.l2_01(&x0[x], b10.get(m, y))),
                    (-1, s.l2_10(b01.get(x, m), &x0[y])),
                    (-1, s.l2_10(&x1[m], b00.get(x, y))),
                    (-1, s.l3(&x0[x], &dm[m], &x0[y])),
                ],
            )
        },
    ));

    report.push(run_check(
        "(e3)",
        "l2(m,l2(x,y)) - l2(l2(m,x),y) - l2(x,l2(m,y)) = l3(dm,x,y)",
        &[n1, n0, n0],
        &[lab1, lab0, lab0],
        |t| {
            let (m, x, y) = (t[0], t[1], t[2]);
            signed_sum(
                ops.zero1(),
                &[
                    (1, s.l2_10(&x1[m], b00.get(x, y))),
                    (-1, s.l2_10(b10.get(m, x), &x0[y])),
                    (-1, s.l2_01(&x0[x], b10.get(m, y))),
                    (-1, s.l3(&dm[m], &x0[x], &x0[y])),
                ],
            )
        },
    ));

    let f_label = "Jacobiator identity for l3";
    let f_dims = [n0, n0, n0, n0];
    if ops.l3_vanishes() {
        // Every term of the identity contains l3.
        let mut record = CheckRecord::new("(f)", f_label);
        record.evaluated = f_dims.iter().product();
        report.push(record);
    } else {
        report.push(run_check("(f)", f_label, &f_dims, &[lab0, lab0, lab0, lab0], |t| {
            let (w, x, y, z) = (t[0], t[1], t[2], t[3]);
            let (xw, xx, xy, xz) = (&x0[w], &x0[x], &x0[y], &x0[z]);
            signed_sum(
                ops.zero1(),
                &[
                    (1, s.l2_01(xw, &l3_at(x, y, z))),
                    (-1, s.l2_01(xx, &l3_at(w, y, z))),
                    (1, s.l2_01(xy, &l3_at(w, x, z))),
                    (1, s.l2_10(&l3_at(w, x, y), xz)),
                    (-1, s.l3(b00.get(w, x), xy, xz)),
                    (-1, s.l3(xx, b00.get(w, y), xz)),
                    (-1, s.l3(xx, xy, b00.get(w, z))),
                    (1, s.l3(xw, b00.get(x, y), xz)),
                    (1, s.l3(xw, xy, b00.get(x, z))),
                    (-1, s.l3(xw, xx, b00.get(y, z))),
                ],
            )
        }));
    }
    report
}

/// Checks conditions (a)-(f) on all basis tuples, which suffices by
/// multilinearity.
pub fn check_sh_leibniz(a: &ShLeibniz2) -> Result<VerifyReport> {
    a.validate()?;
    Ok(verify_on_families(a, &a.basis_family0(), &a.basis_family1()))
}

/// `l2(l2(x,m),y) + l2(l2(m,x),y) = 0`, which holds in every dg algebra.
pub fn check_rep1(a: &ShLeibniz2) -> Result<CheckRecord> {
    a.validate()?;
    let (f0, f1) = (a.basis_family0(), a.basis_family1());
    let s = Skip(a);
    Ok(run_check(
        "rep1",
        "l2(l2(x,m),y) + l2(l2(m,x),y) = 0",
        &[f0.len(), f1.len(), f0.len()],
        &[&f0.labels, &f1.labels, &f0.labels],
        |t| {
            let (x, m, y) = (&f0.items[t[0]], &f1.items[t[1]], &f0.items[t[2]]);
            s.l2_10(&s.l2_01(x, m), y).add(&s.l2_10(&s.l2_10(m, x), y))
        },
    ))
}
