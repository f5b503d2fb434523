"""Goldbach pair counts, band classification and pair-count estimators."""

from ._goldbach import (  # noqa: F401
    AlphaEntry,
    B2Constants,
    GpRecord,
    PrimalityTable,
    alpha,
    alpha_profile,
    band_signature,
    build_sieve,
    count_gp,
    egp,
    egp_b2_closed,
    f_h,
    igp,
    in_h,
    integral_2f,
    integral_3f,
    li,
    Li,
    mertens_partial,
    pen,
    primes_in,
    primorial,
    run_cli,
    scan,
    simulated_primes,
    trpf,
    trpf_curve,
)
