import numpy as np
import pytest

from errors import DomainError, ResourceGuardError
from homology.chains import chain_from_model
from homology.lattice import integer_kernel
from homology.scan import (
    build_context,
    check_support,
    exhaustive_supports,
    random_supports,
    small_support_null_scan,
    support_of_chain,
)
from models import ChainModel
from settings import settings


@pytest.fixture(scope="module")
def context(tilde3):
    return build_context(tilde3.quandle, tilde3.rho)


@pytest.fixture(scope="module")
def c(tilde3, fixtures_dir):
    model = ChainModel.model_validate_json((fixtures_dir / "c.json").read_text(encoding="utf-8"))
    return chain_from_model(model, tilde3.quandle)


def test_live_classes(context):
    assert len(context.classes) == 12
    assert not any(cls.killed for cls in context.classes)


def test_no_small_nontrivial_cycles(tilde3, context):
    report = small_support_null_scan(tilde3.quandle, tilde3.rho, max_support=3, context=context)
    assert report.mode == "exhaustive"
    assert report.classes == 12
    assert report.supports_checked == 12 + 66 + 220
    assert report.counterexamples == []


def test_support_of_c_is_flagged(tilde3, context, c):
    support = support_of_chain(context, c)
    assert len(support) == 4
    report = small_support_null_scan(tilde3.quandle, tilde3.rho, max_support=4, supports=[support], context=context)
    assert report.mode == "explicit"
    assert report.nontrivial_kernels == 1
    assert len(report.counterexamples) >= 1
    assert report.counterexamples[0]["support"] == list(support)


def test_random_scan_is_reproducible(tilde3, context):
    kwargs = dict(max_support=5, min_support=4, mode="random", seed=11, trials=40, context=context)
    first = small_support_null_scan(tilde3.quandle, tilde3.rho, **kwargs)
    second = small_support_null_scan(tilde3.quandle, tilde3.rho, **kwargs)
    assert first == second
    assert first.seed == 11 and first.trials == 40
    assert first.supports_checked == 40


def test_partitioning_does_not_change_results(tilde3, context):
    single = small_support_null_scan(tilde3.quandle, tilde3.rho, max_support=2, workers=1, context=context)
    pooled = small_support_null_scan(tilde3.quandle, tilde3.rho, max_support=2, workers=2, context=context)
    assert single == pooled


def test_support_generators():
    assert exhaustive_supports(4, 2) == [(0,), (1,), (2,), (3,), (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    supports = random_supports(10, 3, 2, trials=25, seed=3)
    assert supports == random_supports(10, 3, 2, trials=25, seed=3)
    assert all(2 <= len(s) <= 3 and list(s) == sorted(set(s)) for s in supports)


def test_invalid_arguments(tilde3, context):
    with pytest.raises(DomainError):
        small_support_null_scan(tilde3.quandle, tilde3.rho, max_support=0, context=context)
    with pytest.raises(DomainError):
        small_support_null_scan(tilde3.quandle, tilde3.rho, mode="sideways", context=context)
    with pytest.raises(ResourceGuardError):
        small_support_null_scan(tilde3.quandle, tilde3.rho, max_support=6, max_supports=100, context=context)


@pytest.mark.slow
def test_no_small_nontrivial_cycles_with_checkerboard(tilde3, checkerboard):
    report = small_support_null_scan(tilde3.quandle, tilde3.rho, checkerboard, max_support=3)
    assert report.classes == 24
    assert report.counterexamples == []


@pytest.mark.slow
def test_random_mid_size_supports_with_checkerboard(tilde3, checkerboard):
    report = small_support_null_scan(
        tilde3.quandle, tilde3.rho, checkerboard, max_support=7, min_support=4, mode="random", seed=5, trials=300
    )
    assert report.counterexamples == []


def test_check_support_matches_direct_kernel(context, c):
    cx = context.chain_complex
    boundaries = np.hstack([cx.vector(cx.boundary(cls.chain(cx.has_y))) for cls in context.classes])
    below = cx.subcomplex_lattice("Qrho", 2).basis
    supports = exhaustive_supports(len(context.classes), 3) + [support_of_chain(context, c)]
    for support in supports:
        direct = integer_kernel(np.hstack([boundaries[:, list(support)], below]))[: len(support), :]
        has_kernel, found = check_support(context, support)
        assert has_kernel == bool(direct.any()), support
        for chain in found:
            assert cx.is_cycle(chain, "Qrho")
            assert set(support_of_chain(context, chain)) <= set(support)


@pytest.mark.slow
def test_million_random_mid_size_supports_with_checkerboard(tilde3, checkerboard):
    context = build_context(tilde3.quandle, tilde3.rho, checkerboard)
    report = small_support_null_scan(
        tilde3.quandle,
        tilde3.rho,
        max_support=7,
        min_support=4,
        mode="random",
        seed=settings.SCAN_SEED,
        trials=1_000_000,
        workers=max(2, settings.SCAN_WORKERS),
        context=context,
    )
    assert report.classes == 24
    assert report.supports_checked == 1_000_000
    assert report.counterexamples == []
