//! Sum-product (belief propagation) decoding — the message-passing
//! baseline the polytope-based decoders are compared against.
//!
//! Log-domain flooding schedule: every bit-to-check message is updated,
//! then every check-to-bit message, then the posteriors.  Iteration stops
//! as soon as the hard decision satisfies all parity checks, or after
//! `max_iter` rounds.  Messages are clipped to ±[`LLR_CLIP`] for numeric
//! stability.
//!
//! The channel objective `γ` follows the crate-wide sign convention
//! (positive favors bit 1), so the internal channel LLR is `λ = −γ`.
//! A converged run returns [`DecodeStatus::Integral`] — the output is a
//! codeword, but unlike LP decoding nothing certifies it as the ML one.
//! A run that exhausts `max_iter` returns [`DecodeStatus::ListFailure`]
//! with the final (parity-violating) hard decision attached.

use super::{DecodeOutcome, DecodeStatus};
use crate::codes::{BinaryWord, ParityCheckCode};
use crate::llr::LlrVector;

/// Message clip magnitude: `tanh(25/2)` is 1.0 at binary64 precision, so
/// larger values add nothing and risk infinities in the inverse.
const LLR_CLIP: f64 = 25.0;

/// Smallest check-degree product kept away from ±1 before the inverse
/// hyperbolic tangent.
const TANH_GUARD: f64 = 1.0 - 1e-15;

fn clip(v: f64) -> f64 {
    v.clamp(-LLR_CLIP, LLR_CLIP)
}

/// Decodes by flooding sum-product for at most `max_iter` iterations.
///
/// The outcome's `candidates_examined` counts the iterations run; no LPs
/// are solved and no randomness is consumed.
pub fn sum_product_decode(
    code: &ParityCheckCode,
    gamma: &LlrVector,
    max_iter: u32,
) -> DecodeOutcome {
    assert_eq!(
        gamma.len(),
        code.n(),
        "objective length must equal the code length"
    );
    let n = code.n();
    let m = code.m();
    // Channel LLRs with the opposite sign convention: λ_i > 0 favors 0.
    let lambda: Vec<f64> = (0..n).map(|i| -gamma.get(i)).collect();

    // Messages live on edges; edge (a, t) is the t-th neighbor of check a.
    // bit_to_check[a][t]: message from that bit into check a.
    let mut bit_to_check: Vec<Vec<f64>> = (0..m)
        .map(|a| {
            code.check_neighbors(a)
                .iter()
                .map(|&i| clip(lambda[i]))
                .collect()
        })
        .collect();
    let mut check_to_bit: Vec<Vec<f64>> = (0..m)
        .map(|a| vec![0.0; code.check_degree(a)])
        .collect();
    // check_slot[a][t]: position of check a in the neighbor list of its
    // t-th bit, for scattering check messages back to bit totals.
    let slot_of: Vec<Vec<usize>> = (0..m)
        .map(|a| {
            code.check_neighbors(a)
                .iter()
                .map(|&i| {
                    code.bit_neighbors(i)
                        .iter()
                        .position(|&b| b == a)
                        .expect("adjacency lists are mutually consistent")
                })
                .collect()
        })
        .collect();
    // incoming[i][s]: message from the s-th check of bit i.
    let mut incoming: Vec<Vec<f64>> = (0..n).map(|i| vec![0.0; code.bit_degree(i)]).collect();

    let mut hard = BinaryWord::zeros(n);
    let mut iters: u32 = 0;
    while iters < max_iter {
        iters += 1;
        // Check update: leave-one-out products of tanh(msg/2) via
        // prefix/suffix scans, scattered back to each bit.
        for a in 0..m {
            let deg = code.check_degree(a);
            let t_in: Vec<f64> = bit_to_check[a].iter().map(|v| (v / 2.0).tanh()).collect();
            let mut prefix = vec![1.0; deg + 1];
            for t in 0..deg {
                prefix[t + 1] = prefix[t] * t_in[t];
            }
            let mut suffix = vec![1.0; deg + 1];
            for t in (0..deg).rev() {
                suffix[t] = suffix[t + 1] * t_in[t];
            }
            for t in 0..deg {
                let prod = (prefix[t] * suffix[t + 1]).clamp(-TANH_GUARD, TANH_GUARD);
                let msg = clip(2.0 * prod.atanh());
                check_to_bit[a][t] = msg;
                let i = code.check_neighbors(a)[t];
                incoming[i][slot_of[a][t]] = msg;
            }
        }
        // Bit update: channel plus all other checks' messages.
        for a in 0..m {
            for (t, &i) in code.check_neighbors(a).iter().enumerate() {
                let total: f64 = incoming[i].iter().sum();
                bit_to_check[a][t] = clip(lambda[i] + total - incoming[i][slot_of[a][t]]);
            }
        }
        // Posterior hard decision and early exit.
        for i in 0..n {
            let total: f64 = lambda[i] + incoming[i].iter().sum::<f64>();
            hard = set_bit(hard, i, u8::from(total < 0.0));
        }
        if code.is_codeword(&hard).expect("hard decision has code length") {
            return DecodeOutcome {
                status: DecodeStatus::Integral,
                word: Some(hard),
                pseudocodeword: None,
                candidates_examined: iters as u64,
                lp_solves: 0,
                rng_draws: 0,
            };
        }
    }
    DecodeOutcome {
        status: DecodeStatus::ListFailure,
        word: Some(hard),
        pseudocodeword: None,
        candidates_examined: iters as u64,
        lp_solves: 0,
        rng_draws: 0,
    }
}

fn set_bit(mut w: BinaryWord, i: usize, v: u8) -> BinaryWord {
    let mut bits = std::mem::take(&mut w).into_bits();
    bits[i] = v;
    BinaryWord::new(bits)
}
