//! Noisy news: signal technologies, posterior values, garbling and the
//! equilibrium and attention analysis when policies are seen through news.

mod equilibrium;
mod posterior;
mod technology;

pub use equilibrium::{
    attention_set_noisy, audited_news, enumerate_equilibria_noisy, enumerate_equilibria_noisy_with,
    median_extreme_value, necessary_news_bound, news_win_probability, news_win_table,
    noisy_membership,
};
pub use posterior::{
    noisy_belief, noisy_belief_from, posterior_value, solve_attention_noisy, NoisyBelief,
    SignalJoint,
};
pub use technology::{
    check_log_supermodularity, LsmReport, LsmViolation, MarkovKernel, NewsFamily, NewsTechnology,
};
