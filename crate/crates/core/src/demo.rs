//! A worked example: lift one instance, recover its exponent, and show every
//! intermediate value.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::{find_dual_primitive_root, DlogInstance, SafePrimePair};
use crate::lifts::{
    canonical_lift, carry, fermat_quotient_pq, verify_carry_relation, verify_fermat_carry_relation,
};
use crate::noncanonical::{
    construct_noncanonical, lift_to_p_minus_1, recover_mod_pq, recover_mod_q, smart_recover,
    OffsetCase,
};
use crate::report::TOOL_VERSION;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Walkthrough {
    pub p: String,
    pub q: String,
    pub n: String,
    pub k: String,
    pub a0: String,
    pub b0: String,
    pub fermat_a0: String,
    pub fermat_b0: String,
    pub a1: String,
    pub a0_lifted: String,
    pub b1: String,
    pub b0_lifted: String,
    pub beta: String,
    pub l: String,
    pub case: String,
    pub recovered: String,
    pub recovered_modulus: String,
    pub smart: String,
    /// `None` when the offset only determines `n` modulo `p`.
    pub n_mod_p_minus_1: Option<String>,
    pub version: String,
    pub steps: Vec<Step>,
}

impl Walkthrough {
    pub fn all_passed(&self) -> bool {
        self.steps.iter().all(|s| s.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("walkthrough serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |label: &str, value: &str| {
            let _ = writeln!(out, "{label:<28}{value}");
        };
        line("pair", &format!("p={} q={}", self.p, self.q));
        line("base a0 (mod pq)", &self.a0);
        line("exponent n", &self.n);
        line("target b0 = a0^n (mod pq)", &self.b0);
        line("fermat quotient q(a0)", &self.fermat_a0);
        line("fermat quotient q(b0)", &self.fermat_b0);
        line("lift digit a1", &self.a1);
        line("lifted a0 (mod p^2 q^2)", &self.a0_lifted);
        line("lift digit b1", &self.b1);
        line("lifted b0 (mod p^2 q^2)", &self.b0_lifted);
        line("carry beta", &self.beta);
        line("offsets k, l", &format!("{}, {}", self.k, self.l));
        line("offset case", &self.case);
        line(
            "recovered n",
            &format!("{} (mod {})", self.recovered, self.recovered_modulus),
        );
        line("smart route", &self.smart);
        line(
            "n (mod p-1)",
            self.n_mod_p_minus_1
                .as_deref()
                .unwrap_or("unavailable: offset is a multiple of q"),
        );
        for step in &self.steps {
            let _ = writeln!(
                out,
                "{} {}",
                if step.pass { "PASS" } else { "FAIL" },
                step.name
            );
        }
        out
    }
}

/// Builds the walkthrough for `a0^n ≡ b0 (mod pq)` with `a0` the smallest
/// dual primitive root and offset `k`.
pub fn walkthrough(pair: &SafePrimePair, n: &BigUint, k: &BigUint) -> Result<Walkthrough> {
    let pq = pair.pq().get();
    if (k % pq).is_zero() {
        return Err(Error::ZeroOffset);
    }
    if n >= pair.subgroup_order().get() {
        return Err(Error::TooLarge {
            value: n.clone(),
            bound: pair.subgroup_order().get().clone(),
        });
    }
    let k = k % pq;
    let a0 = find_dual_primitive_root(pair)?;
    let inst = DlogInstance::from_exponent(pair, a0.value(), n)?;
    let b0 = inst.b0().clone();

    let qa = fermat_quotient_pq(pair, a0.value())?;
    let qb = fermat_quotient_pq(pair, b0.value())?;
    let base = canonical_lift(pair, a0.value())?;
    let target = canonical_lift(pair, b0.value())?;
    let beta = carry(pair, a0.value(), n, b0.value())?;

    let lift = construct_noncanonical(&inst, &base, &target, &k)?;
    let case = lift.case()?;
    let l = lift.l().value().clone();
    let recovered = recover_mod_pq(pair, a0.value(), b0.value(), &k, &l)?;
    let smart = smart_recover(pair, &base, &target, &k, &l)?;

    let q = pair.q().get();
    let n_mod_q = match &case {
        OffsetCase::SubgroupPreserving { k1, l1 } => {
            Some(recover_mod_q(pair, a0.value(), b0.value(), k1.value(), l1.value())?.into_value())
        }
        _ if recovered.modulus().get().is_multiple_of(q) => Some(recovered.value() % q),
        _ => None,
    };
    let a0_p = a0.value() % pair.p().get();
    let b0_p = b0.value() % pair.p().get();
    let final_n = n_mod_q
        .map(|r| lift_to_p_minus_1(pair, &a0_p, &b0_p, &r))
        .transpose()?;

    let mut steps = vec![
        Step::new("lifted power", base.lifted().pow(n) == *target.lifted()),
        Step::new(
            "carry relation",
            verify_carry_relation(pair, &base, &target, n, &beta),
        ),
        Step::new(
            "fermat carry relation",
            verify_fermat_carry_relation(pair, a0.value(), b0.value(), n, &beta)?,
        ),
        Step::new(
            "non-canonical power",
            lift.base_element().pow(n) == lift.target_element(),
        ),
        Step::new(
            "closed-form recovery",
            recovered.value() == &(n % recovered.modulus().get()),
        ),
        Step::new("smart route agrees", smart == recovered),
    ];
    if let Some(r) = &final_n {
        steps.push(Step::new(
            "lift to p-1",
            r.value() == &(n % pair.p_minus_1().get()),
        ));
    }

    Ok(Walkthrough {
        p: pair.p().to_string(),
        q: pair.q().to_string(),
        n: n.to_string(),
        k: k.to_string(),
        a0: a0.value().to_string(),
        b0: b0.value().to_string(),
        fermat_a0: qa.value().value().to_string(),
        fermat_b0: qb.value().value().to_string(),
        a1: base.digit().value().to_string(),
        a0_lifted: base.lifted().value().to_string(),
        b1: target.digit().value().to_string(),
        b0_lifted: target.lifted().value().to_string(),
        beta: beta.beta().value().to_string(),
        l: l.to_string(),
        case: case.name().to_string(),
        recovered: recovered.value().to_string(),
        recovered_modulus: recovered.modulus().to_string(),
        smart: smart.value().to_string(),
        n_mod_p_minus_1: final_n.map(|r| r.value().to_string()),
        version: TOOL_VERSION.to_string(),
        steps,
    })
}

impl Step {
    fn new(name: &str, pass: bool) -> Self {
        Step {
            name: name.to_string(),
            pass,
        }
    }
}
