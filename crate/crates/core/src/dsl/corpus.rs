//! Every built-in identity written in the identity language, paired with
//! the hand-coded checker it must agree with.

use crate::identities::{Form, IdentityId, IdentitySpec};

pub struct CorpusEntry {
    pub spec: IdentitySpec,
    pub text: &'static str,
}

const CENTRAL_SUM: &str =
    "sum(k=0..n, binom(2*k,k)/(2*k+1) * binom(2*(n-k), n-k)) == 16^n / ((2*n+1) * binom(2*n,n))";

const RATIO_A: &str =
    "sum(k=0..n, binom(2*k,k) / (2^(4*k) * (2*k+1) * (n-k+1)^2 * binom(2*(n-k+1), n-k+1))) \
     == 3*dfact(2*n+1)^2 / (2^(2*n+3) * fact(2*n+3)) * (pi2 - 2*trigamma_half(n+1))";
const RATIO_B: &str =
    "sum(k=0..n, binom(2*k,k) / (2^(4*k) * (n-k+1)^2 * binom(2*(n-k+1), n-k+1))) \
     == dfact(2*n+1)^2 / (2^(2*n+3) * fact(2*n+2)) * (pi2 - 2*trigamma_half(n+1))";
const RATIO_C: &str =
    "sum(k=0..n, binom(2*k,k) / (2^(4*k) * (2*k+1) * (n-k+1) * binom(2*(n-k+1), n-k+1))) \
     == dfact(2*n+1)^2 / (2^(2*n+3) * fact(2*n+2)) * (pi2 - 2*trigamma_half(n+1))";

const RAW1_PRINTED: &str = "6*dfact(2*n+1)^2 / fact(2*n+3) * sum(k=0..n, 1/(2*k+1)^2) \
     == sum(k=0..n, 2^(2*(n-2*k)-1) / ((2*k+1)*(n-k+1)^2) * binom(2*k,k) / binom(2*(n-k+1), n-k+1))";
const RAW1_CORRECTED: &str = "6*dfact(2*n+1)^2 / fact(2*n+3) * sum(k=0..n, 1/(2*k+1)^2) \
     == sum(k=0..n, 2^(2*(n-2*k)+1) / ((2*k+1)*(n-k+1)^2) * binom(2*k,k) / binom(2*(n-k+1), n-k+1))";
const RAW2: &str = "2*dfact(2*n+1)^2 / fact(2*n+2) * sum(k=0..n, 1/(2*k+1)^2) \
     == sum(k=0..n, 2^(2*(n-2*k)+1) / (n-k+1)^2 * binom(2*k,k) / binom(2*(n-k+1), n-k+1))";
const RAW3: &str = "2*dfact(2*n+1)^2 / fact(2*n+2) * sum(k=0..n, 1/(2*k+1)^2) \
     == sum(k=0..n, 2^(2*(n-2*k)+1) / ((2*k+1)*(n-k+1)) * binom(2*k,k) / binom(2*(n-k+1), n-k+1))";

const MONTHLY_FINAL: &str =
    "sum(k=0..n, binom(2*k,k) * binom(2*(n-k), n-k) / (k+1)) == binom(2*n+1, n)";
const MONTHLY: &str =
    "sum(k=0..n, binom(2*k,k) * binom(2*(n-k+1), n-k+1) / (k+1)) == 2*binom(2*n+2, n)";
const ALZER_NAGY: &str = "sum(k=0..n, binom(2*k,k)*catalan(n-k)) == binom(2*(n+1),n+1)/2";
const EQUIVALENCE: &str = "2*binom(2*n+2, n) + binom(2*(n+1), n+1)/(n+2) == binom(2*n+3, n+1)";

const RW1: &str = "sum(k=0..n, (n-k+1)*catalan(k)*catalan(n-k)) == binom(2*n+1, n)";
const RW2: &str = "sum(k=0..n, (k+1)*(n-k+1)/(2*k+1) * catalan(k)*catalan(n-k)) \
     == 16^n / ((2*n+1)*(n+1)*catalan(n))";
const RW3_PRINTED: &str =
    "sum(k=0..n, (n-k+2) / (2^(4*k)*(k+1)*(2*k+1)*(n-k+1)^2) * catalan(k)/catalan(n-k+1)) \
     == 3*dfact(2*n+1)^2 / (2^(2*n)*fact(2*n+3)) * sum(k=0..n, 1/(2*k+1)^2)";
const RW3_CORRECTED: &str =
    "sum(k=0..n, (k+1) / (2^(4*k)*(n-k+2)*(2*k+1)*(n-k+1)^2) * catalan(k)/catalan(n-k+1)) \
     == 3*dfact(2*n+1)^2 / (2^(2*n)*fact(2*n+3)) * sum(k=0..n, 1/(2*k+1)^2)";
const RW4_PRINTED: &str =
    "sum(k=0..n, (n-k+2) / (2^(4*k)*(k+1)*(n-k+1)^2) * catalan(k)/catalan(n-k+1)) \
     == dfact(2*n+1)^2 / (2^(2*n)*fact(2*n+2)) * sum(k=0..n, 1/(2*k+1)^2)";
const RW4_CORRECTED: &str =
    "sum(k=0..n, (k+1) / (2^(4*k)*(n-k+2)*(n-k+1)^2) * catalan(k)/catalan(n-k+1)) \
     == dfact(2*n+1)^2 / (2^(2*n)*fact(2*n+2)) * sum(k=0..n, 1/(2*k+1)^2)";
const RW5_PRINTED: &str =
    "sum(k=0..n, (n-k+2) / (2^(4*k)*(k+1)*(2*k+1)*(n-k+1)) * catalan(k)/catalan(n-k+1)) \
     == dfact(2*n+1)^2 / (2^(2*n)*fact(2*n+2)) * sum(k=0..n, 1/(2*k+1)^2)";
const RW5_CORRECTED: &str =
    "sum(k=0..n, (k+1) / (2^(4*k)*(n-k+2)*(2*k+1)*(n-k+1)) * catalan(k)/catalan(n-k+1)) \
     == dfact(2*n+1)^2 / (2^(2*n)*fact(2*n+2)) * sum(k=0..n, 1/(2*k+1)^2)";

fn entry(id: IdentityId, form: Option<Form>, text: &'static str) -> CorpusEntry {
    CorpusEntry {
        spec: IdentitySpec { id, form },
        text,
    }
}

/// All built-in identities in DSL form, one entry per identity and form.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    use Form::{Corrected, Printed};
    use IdentityId::*;
    vec![
        entry(CentralSum, None, CENTRAL_SUM),
        entry(Ratio(1), None, RATIO_A),
        entry(Ratio(2), None, RATIO_B),
        entry(Ratio(3), None, RATIO_C),
        entry(RawCauchy(1), Some(Printed), RAW1_PRINTED),
        entry(RawCauchy(1), Some(Corrected), RAW1_CORRECTED),
        entry(RawCauchy(2), Some(Printed), RAW2),
        entry(RawCauchy(2), Some(Corrected), RAW2),
        entry(RawCauchy(3), Some(Printed), RAW3),
        entry(RawCauchy(3), Some(Corrected), RAW3),
        entry(MonthlyFinal, None, MONTHLY_FINAL),
        entry(Monthly, None, MONTHLY),
        entry(AlzerNagy, None, ALZER_NAGY),
        entry(EquivalenceStep, None, EQUIVALENCE),
        entry(CatalanRewrite(1), Some(Printed), RW1),
        entry(CatalanRewrite(2), Some(Printed), RW2),
        entry(CatalanRewrite(3), Some(Printed), RW3_PRINTED),
        entry(CatalanRewrite(3), Some(Corrected), RW3_CORRECTED),
        entry(CatalanRewrite(4), Some(Printed), RW4_PRINTED),
        entry(CatalanRewrite(4), Some(Corrected), RW4_CORRECTED),
        entry(CatalanRewrite(5), Some(Printed), RW5_PRINTED),
        entry(CatalanRewrite(5), Some(Corrected), RW5_CORRECTED),
    ]
}
