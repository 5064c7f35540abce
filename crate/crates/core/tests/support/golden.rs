/// Full fusion table of the orbifold for L = Zα, ⟨α,α⟩ = 2, frozen from the
/// rank-one evaluator in `rank_one.rs`.
pub const RANK_ONE: &[&str] = &[
    "D(0;0) x D(0;0) = D(0;0)",
    "D(0;0) x D(0;1) = D(0;1)",
    "D(0;0) x D(1/2;0) = D(1/2;0)",
    "D(0;0) x D(1/2;1) = D(1/2;1)",
    "D(0;0) x N(0,1/2) = N(0,1/2)",
    "D(0;0) x T(0;0) = T(0;0)",
    "D(0;0) x T(0;1) = T(0;1)",
    "D(0;0) x T(1/2;0) = T(1/2;0)",
    "D(0;0) x T(1/2;1) = T(1/2;1)",
    "D(0;1) x D(0;0) = D(0;1)",
    "D(0;1) x D(0;1) = D(0;0)",
    "D(0;1) x D(1/2;0) = D(1/2;1)",
    "D(0;1) x D(1/2;1) = D(1/2;0)",
    "D(0;1) x N(0,1/2) = N(0,1/2)",
    "D(0;1) x T(0;0) = T(0;1)",
    "D(0;1) x T(0;1) = T(0;0)",
    "D(0;1) x T(1/2;0) = T(1/2;1)",
    "D(0;1) x T(1/2;1) = T(1/2;0)",
    "D(1/2;0) x D(0;0) = D(1/2;0)",
    "D(1/2;0) x D(0;1) = D(1/2;1)",
    "D(1/2;0) x D(1/2;0) = D(0;0)",
    "D(1/2;0) x D(1/2;1) = D(0;1)",
    "D(1/2;0) x N(0,1/2) = N(0,1/2)",
    "D(1/2;0) x T(0;0) = T(0;1)",
    "D(1/2;0) x T(0;1) = T(0;0)",
    "D(1/2;0) x T(1/2;0) = T(1/2;0)",
    "D(1/2;0) x T(1/2;1) = T(1/2;1)",
    "D(1/2;1) x D(0;0) = D(1/2;1)",
    "D(1/2;1) x D(0;1) = D(1/2;0)",
    "D(1/2;1) x D(1/2;0) = D(0;1)",
    "D(1/2;1) x D(1/2;1) = D(0;0)",
    "D(1/2;1) x N(0,1/2) = N(0,1/2)",
    "D(1/2;1) x T(0;0) = T(0;0)",
    "D(1/2;1) x T(0;1) = T(0;1)",
    "D(1/2;1) x T(1/2;0) = T(1/2;1)",
    "D(1/2;1) x T(1/2;1) = T(1/2;0)",
    "N(0,1/2) x D(0;0) = N(0,1/2)",
    "N(0,1/2) x D(0;1) = N(0,1/2)",
    "N(0,1/2) x D(1/2;0) = N(0,1/2)",
    "N(0,1/2) x D(1/2;1) = N(0,1/2)",
    "N(0,1/2) x N(0,1/2) = D(0;0) + D(0;1) + D(1/2;0) + D(1/2;1)",
    "N(0,1/2) x T(0;0) = T(1/2;0) + T(1/2;1)",
    "N(0,1/2) x T(0;1) = T(1/2;0) + T(1/2;1)",
    "N(0,1/2) x T(1/2;0) = T(0;0) + T(0;1)",
    "N(0,1/2) x T(1/2;1) = T(0;0) + T(0;1)",
    "T(0;0) x D(0;0) = T(0;0)",
    "T(0;0) x D(0;1) = T(0;1)",
    "T(0;0) x D(1/2;0) = T(0;1)",
    "T(0;0) x D(1/2;1) = T(0;0)",
    "T(0;0) x N(0,1/2) = T(1/2;0) + T(1/2;1)",
    "T(0;0) x T(0;0) = D(0;0) + D(1/2;1)",
    "T(0;0) x T(0;1) = D(0;1) + D(1/2;0)",
    "T(0;0) x T(1/2;0) = N(0,1/2)",
    "T(0;0) x T(1/2;1) = N(0,1/2)",
    "T(0;1) x D(0;0) = T(0;1)",
    "T(0;1) x D(0;1) = T(0;0)",
    "T(0;1) x D(1/2;0) = T(0;0)",
    "T(0;1) x D(1/2;1) = T(0;1)",
    "T(0;1) x N(0,1/2) = T(1/2;0) + T(1/2;1)",
    "T(0;1) x T(0;0) = D(0;1) + D(1/2;0)",
    "T(0;1) x T(0;1) = D(0;0) + D(1/2;1)",
    "T(0;1) x T(1/2;0) = N(0,1/2)",
    "T(0;1) x T(1/2;1) = N(0,1/2)",
    "T(1/2;0) x D(0;0) = T(1/2;0)",
    "T(1/2;0) x D(0;1) = T(1/2;1)",
    "T(1/2;0) x D(1/2;0) = T(1/2;0)",
    "T(1/2;0) x D(1/2;1) = T(1/2;1)",
    "T(1/2;0) x N(0,1/2) = T(0;0) + T(0;1)",
    "T(1/2;0) x T(0;0) = N(0,1/2)",
    "T(1/2;0) x T(0;1) = N(0,1/2)",
    "T(1/2;0) x T(1/2;0) = D(0;0) + D(1/2;0)",
    "T(1/2;0) x T(1/2;1) = D(0;1) + D(1/2;1)",
    "T(1/2;1) x D(0;0) = T(1/2;1)",
    "T(1/2;1) x D(0;1) = T(1/2;0)",
    "T(1/2;1) x D(1/2;0) = T(1/2;1)",
    "T(1/2;1) x D(1/2;1) = T(1/2;0)",
    "T(1/2;1) x N(0,1/2) = T(0;0) + T(0;1)",
    "T(1/2;1) x T(0;0) = N(0,1/2)",
    "T(1/2;1) x T(0;1) = N(0,1/2)",
    "T(1/2;1) x T(1/2;0) = D(0;1) + D(1/2;1)",
    "T(1/2;1) x T(1/2;1) = D(0;0) + D(1/2;0)",
];
