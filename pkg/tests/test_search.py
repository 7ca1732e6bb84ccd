from fractions import Fraction

import pytest
from pydantic import ValidationError

from core.config import settings
from enums.generator import CandidateGenerator, TrialOutcome
from src.constructions import NineGonSpec, build_nine_gon
from src.search import (
    SearchConfig,
    classify_candidate,
    evaluate_trial,
    generate_candidate,
    run_search,
    shrink_finding,
    verify_candidate,
)


def exact_nine_gon_config(**overrides) -> SearchConfig:
    return SearchConfig(
        n=9,
        trials=1,
        generator=CandidateGenerator.PERTURBED_NINEGON,
        magnitude=0,
        **overrides,
    )


class TestSearchConfig:
    def test_defaults(self):
        cfg = SearchConfig(n=10)
        assert cfg.trials >= 1 and cfg.parallelism == 1
        assert cfg.magnitude == Fraction(1, 1000)

    def test_parses_rational_strings(self):
        assert SearchConfig(n=10, magnitude="1/500").magnitude == Fraction(1, 500)

    @pytest.mark.parametrize(
        "fields",
        [
            {"n": 8},
            {"n": 10, "trials": 0},
            {"n": 10, "magnitude": -1},
            {"n": 10, "generator": CandidateGenerator.SYMMETRIC_NGON},
            {"n": 10, "parallelism": 0},
            {"n": 10, "seed": -1},
        ],
    )
    def test_rejects_invalid_fields(self, fields):
        with pytest.raises(ValidationError):
            SearchConfig(**fields)


def test_unperturbed_candidate_is_the_nine_gon():
    assert generate_candidate(exact_nine_gon_config(), 0) == build_nine_gon(NineGonSpec())


def test_candidates_are_keyed_by_seed_and_trial():
    cfg = SearchConfig(n=12, generator=CandidateGenerator.SYMMETRIC_NGON, seed=5)
    assert generate_candidate(cfg, 3) == generate_candidate(cfg, 3)
    assert generate_candidate(cfg, 3) != generate_candidate(cfg, 4)


def test_classification_of_the_nine_gon():
    assert classify_candidate(build_nine_gon()) is TrialOutcome.FOUND


def test_unperturbed_search_finds_the_nine_gon():
    result = run_search(exact_nine_gon_config())
    assert result.statistics.found == 1
    (finding,) = result.findings
    assert finding.trial == 0
    assert finding.points == build_nine_gon()
    assert len(finding.deletions) == 9
    assert all(d.nonempty and d.witness is not None for d in finding.deletions)


def test_statistics_are_conserved():
    cfg = SearchConfig(n=10, trials=6, seed=1, generator=CandidateGenerator.RANDOM_CONVEX)
    stats = run_search(cfg).statistics
    assert stats.trials == 6
    assert stats.found + stats.rejected == 6


def test_exhausted_random_draws_are_counted(monkeypatch):
    monkeypatch.setattr(settings, "RANDOM_MAX_RETRIES", 0)
    cfg = SearchConfig(n=10, trials=2, generator=CandidateGenerator.RANDOM_CONVEX)
    assert evaluate_trial(cfg, 0).outcome is TrialOutcome.NOT_STRICTLY_CONVEX
    assert run_search(cfg).statistics.not_strictly_convex == 2


def test_results_do_not_depend_on_parallelism():
    cfg = SearchConfig(n=9, trials=4, seed=2, magnitude="1/100")
    serial = run_search(cfg)
    parallel = run_search(cfg.model_copy(update={"parallelism": 2}))
    assert serial == parallel


def test_findings_reverify():
    result = run_search(exact_nine_gon_config())
    for finding in result.findings:
        assert verify_candidate(finding.trial, finding.points) == finding


def test_shrink_without_candidates_is_a_fixed_point():
    (finding,) = run_search(exact_nine_gon_config()).findings
    assert shrink_finding(finding, denominators=[]) is finding


@pytest.mark.slow
def test_shrink_keeps_the_counterexample():
    cfg = exact_nine_gon_config(digits=16)
    (finding,) = run_search(cfg).findings
    shrunk = shrink_finding(finding)
    assert verify_candidate(shrunk.trial, shrunk.points) is not None
    for before, after in zip(finding.points, shrunk.points):
        assert after.x.denominator <= before.x.denominator
        assert after.y.denominator <= before.y.denominator
