//! `SL(2, C)` characters of the binary icosahedral group
//! `G = <r, s | r^5 = s^3 = (rs)^2>`, computed exactly over `Q(zeta_5)`.
//!
//! `G` is the fundamental group of `M(3, -2, 5)`, so these characters give
//! the dimension of its skein module at `A = -1`.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cyclo::{Cyclotomic5, Mat2};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum RepName {
    #[serde(rename = "sigma0")]
    Sigma0,
    #[serde(rename = "sigma1")]
    Sigma1,
    #[serde(rename = "sigma2")]
    Sigma2,
}

impl fmt::Display for RepName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepName::Sigma0 => "sigma0",
            RepName::Sigma1 => "sigma1",
            RepName::Sigma2 => "sigma2",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    pub name: RepName,
    pub image_r: Mat2,
    pub image_s: Mat2,
}

fn z(powers: [i64; 5]) -> Cyclotomic5 {
    Cyclotomic5::from_powers(powers)
}

/// `sigma0` (doubled trivial), `sigma1` and `sigma2`.
pub fn build_representations() -> [Representation; 3] {
    let fifth = BigRational::new(BigInt::from(1), BigInt::from(5));
    let a1 = Mat2::new(
        z([0, -3, -1, 1, -2]),
        z([0, 1, -3, -2, -1]),
        z([0, 1, 2, 3, -1]),
        z([0, -2, 1, -1, -3]),
    )
    .scale(&fifth);
    let b1 = Mat2::new(
        z([0, -1, -2, -3, -4]),
        z([0, 2, -1, 1, -2]),
        z([0, 2, -1, 1, -2]),
        z([0, -4, -3, -2, -1]),
    )
    .scale(&fifth);
    let a2 = Mat2::new(
        z([0, 1, -1, 0, 0]),
        z([0, 0, -1, 0, -1]),
        z([0, -1, 0, 0, -1]),
        z([0, -1, 0, -1, 0]),
    );
    let b2 = Mat2::new(
        Cyclotomic5::one(),
        -Cyclotomic5::zeta_pow(3),
        Cyclotomic5::zeta_pow(2),
        Cyclotomic5::zero(),
    );
    [
        Representation {
            name: RepName::Sigma0,
            image_r: Mat2::identity(),
            image_s: Mat2::identity(),
        },
        Representation {
            name: RepName::Sigma1,
            image_r: a1,
            image_s: b1,
        },
        Representation {
            name: RepName::Sigma2,
            image_r: a2,
            image_s: b2,
        },
    ]
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupCheck {
    pub det_r: Cyclotomic5,
    pub det_s: Cyclotomic5,
    /// `R^5`, which must also equal `S^3` and `(RS)^2`.
    pub central: Mat2,
    pub r5_eq_s3: bool,
    pub s3_eq_rs2: bool,
    pub central_is_involution: bool,
}

impl GroupCheck {
    pub fn ok(&self) -> bool {
        self.det_r == Cyclotomic5::one()
            && self.det_s == Cyclotomic5::one()
            && self.r5_eq_s3
            && self.s3_eq_rs2
            && self.central_is_involution
    }
}

pub fn check_group_relations(rep: &Representation) -> GroupCheck {
    let (r, s) = (&rep.image_r, &rep.image_s);
    let r5 = r.pow(5);
    let s3 = s.pow(3);
    let rs2 = (r * s).pow(2);
    GroupCheck {
        det_r: r.det(),
        det_s: s.det(),
        r5_eq_s3: r5 == s3,
        s3_eq_rs2: s3 == rs2,
        central_is_involution: r5.pow(2) == Mat2::identity(),
        central: r5,
    }
}

/// `R^5 = S^3 = (RS)^2` and `(R^5)^2 = I`, exactly.
pub fn verify_group_relations(rep: &Representation) -> bool {
    let c = check_group_relations(rep);
    c.r5_eq_s3 && c.s3_eq_rs2 && c.central_is_involution
}

/// Representatives of the nine conjugacy classes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ClassRep {
    One,
    R,
    R2,
    R3,
    R4,
    R5,
    Rs,
    S,
    S2,
}

impl ClassRep {
    pub const ALL: [ClassRep; 9] = [
        ClassRep::One,
        ClassRep::R,
        ClassRep::R2,
        ClassRep::R3,
        ClassRep::R4,
        ClassRep::R5,
        ClassRep::Rs,
        ClassRep::S,
        ClassRep::S2,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ClassRep::One => "1",
            ClassRep::R => "r",
            ClassRep::R2 => "r^2",
            ClassRep::R3 => "r^3",
            ClassRep::R4 => "r^4",
            ClassRep::R5 => "r^5",
            ClassRep::Rs => "rs",
            ClassRep::S => "s",
            ClassRep::S2 => "s^2",
        }
    }

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|c| *c == self).unwrap()
    }

    pub fn image(self, rep: &Representation) -> Mat2 {
        let (r, s) = (&rep.image_r, &rep.image_s);
        match self {
            ClassRep::One => Mat2::identity(),
            ClassRep::R => r.clone(),
            ClassRep::R2 => r.pow(2),
            ClassRep::R3 => r.pow(3),
            ClassRep::R4 => r.pow(4),
            ClassRep::R5 => r.pow(5),
            ClassRep::Rs => r * s,
            ClassRep::S => s.clone(),
            ClassRep::S2 => s.pow(2),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterTable {
    pub rows: [[Cyclotomic5; 9]; 3],
}

impl CharacterTable {
    /// `tau_g(chi_row)`.
    pub fn tau(&self, g: ClassRep, row: usize) -> &Cyclotomic5 {
        &self.rows[row][g.index()]
    }

    pub fn to_json(&self) -> Value {
        let columns: Vec<&str> = ClassRep::ALL.iter().map(|c| c.label()).collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| Value::Array(row.iter().map(|e| Value::String(e.to_string())).collect()))
            .collect();
        json!({ "columns": columns, "rows": rows })
    }
}

impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..9)
            .map(|col| {
                cells
                    .iter()
                    .map(|r| r[col].len())
                    .chain([ClassRep::ALL[col].label().len() + 4])
                    .max()
                    .unwrap()
            })
            .collect();
        let mut lines = vec![String::from("     ")];
        for (col, g) in ClassRep::ALL.iter().enumerate() {
            let _ = write!(lines[0], "  {:<w$}", format!("tau_{}", g.label()), w = widths[col]);
        }
        for (i, row) in cells.iter().enumerate() {
            let mut line = format!("chi_{i}");
            for (col, cell) in row.iter().enumerate() {
                let _ = write!(line, "  {:<w$}", cell, w = widths[col]);
            }
            lines.push(line);
        }
        for line in lines {
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

pub fn character_table() -> CharacterTable {
    let reps = build_representations();
    CharacterTable {
        rows: reps
            .each_ref()
            .map(|rep| ClassRep::ALL.map(|g| g.image(rep).trace())),
    }
}

/// `tau_lhs = s * tau_s + r * tau_r + one * tau_1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TraceRelation {
    pub lhs: ClassRep,
    pub s: i64,
    pub r: i64,
    pub one: i64,
}

impl TraceRelation {
    pub fn holds_at(&self, table: &CharacterTable, row: usize) -> bool {
        let rhs = Cyclotomic5::from_int(self.s) * table.tau(ClassRep::S, row).clone()
            + Cyclotomic5::from_int(self.r) * table.tau(ClassRep::R, row).clone()
            + Cyclotomic5::from_int(self.one) * table.tau(ClassRep::One, row).clone();
        *table.tau(self.lhs, row) == rhs
    }

    pub fn holds(&self, table: &CharacterTable) -> bool {
        (0..3).all(|row| self.holds_at(table, row))
    }
}

impl fmt::Display for TraceRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tau_{} =", self.lhs.label())?;
        let mut first = true;
        for (c, name) in [(self.s, "tau_s"), (self.r, "tau_r"), (self.one, "tau_1")] {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let sep = if first && c > 0 { "" } else { " " };
            if mag == 1 {
                write!(f, " {sign}{sep}{name}")?;
            } else {
                write!(f, " {sign}{sep}{mag} {name}")?;
            }
            first = false;
        }
        Ok(())
    }
}

pub const TRACE_RELATIONS: [TraceRelation; 6] = [
    TraceRelation { lhs: ClassRep::S2, s: 3, r: 0, one: -2 },
    TraceRelation { lhs: ClassRep::Rs, s: 2, r: 0, one: -1 },
    TraceRelation { lhs: ClassRep::R5, s: 4, r: 0, one: -3 },
    TraceRelation { lhs: ClassRep::R4, s: 4, r: -1, one: -2 },
    TraceRelation { lhs: ClassRep::R3, s: 3, r: -1, one: -1 },
    TraceRelation { lhs: ClassRep::R2, s: 1, r: 1, one: -1 },
];

pub fn verify_trace_relations(table: &CharacterTable) -> bool {
    TRACE_RELATIONS.iter().all(|rel| rel.holds(table))
}

pub fn det3(m: &[[Cyclotomic5; 3]; 3]) -> Cyclotomic5 {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1]
    };
    &m[0][0] * &minor(1, 2, 1, 2) - &m[0][1] * &minor(1, 2, 0, 2) + &m[0][2] * &minor(1, 2, 0, 1)
}

/// Rows `chi_0, chi_1, chi_2`, columns `tau_1, tau_r, tau_s`.
pub fn independence_matrix(table: &CharacterTable) -> [[Cyclotomic5; 3]; 3] {
    [0, 1, 2].map(|row| [ClassRep::One, ClassRep::R, ClassRep::S].map(|g| table.tau(g, row).clone()))
}

pub fn independence_determinant(table: &CharacterTable) -> Cyclotomic5 {
    det3(&independence_matrix(table))
}

/// Everything the `charvar` command reports.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharvarReport {
    pub groups: Vec<(RepName, GroupCheck)>,
    pub table: CharacterTable,
    pub relations: Vec<(TraceRelation, bool)>,
    pub determinant: Cyclotomic5,
}

impl CharvarReport {
    pub fn compute() -> Self {
        let groups = build_representations()
            .iter()
            .map(|rep| (rep.name, check_group_relations(rep)))
            .collect();
        let table = character_table();
        let relations = TRACE_RELATIONS.iter().map(|r| (*r, r.holds(&table))).collect();
        let determinant = independence_determinant(&table);
        Self {
            groups,
            table,
            relations,
            determinant,
        }
    }

    pub fn ok(&self) -> bool {
        self.groups.iter().all(|(_, g)| g.ok())
            && self.relations.iter().all(|(_, ok)| *ok)
            && !self.determinant.is_zero()
    }

    pub fn to_json(&self) -> Value {
        let groups: Vec<Value> = self
            .groups
            .iter()
            .map(|(name, g)| {
                json!({
                    "name": name,
                    "det_r": g.det_r.to_string(),
                    "det_s": g.det_s.to_string(),
                    "central_trace": g.central.trace().to_string(),
                    "ok": g.ok(),
                })
            })
            .collect();
        let relations: Vec<Value> = self
            .relations
            .iter()
            .map(|(r, ok)| json!({ "relation": r.to_string(), "ok": ok }))
            .collect();
        json!({
            "representations": groups,
            "table": self.table.to_json(),
            "relations": relations,
            "determinant": self.determinant.to_string(),
            "ok": self.ok(),
        })
    }
}

impl fmt::Display for CharvarReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, g) in &self.groups {
            let status = if g.ok() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{status} {name}: det R = {}, det S = {}, R^5 = S^3 = (RS)^2 with trace {}",
                g.det_r,
                g.det_s,
                g.central.trace()
            )?;
        }
        writeln!(f)?;
        write!(f, "{}", self.table)?;
        writeln!(f)?;
        for (rel, ok) in &self.relations {
            writeln!(f, "{} {rel}", if *ok { "PASS" } else { "FAIL" })?;
        }
        let status = if self.determinant.is_zero() { "FAIL" } else { "PASS" };
        writeln!(f, "{status} det[tau_1, tau_r, tau_s] = {}", self.determinant)
    }
}
