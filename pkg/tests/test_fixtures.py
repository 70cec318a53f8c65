"""Fixture fidelity: the shipped catalogues and scripts against the source
table's published counts, wordings, ratings, weights and scales."""

from __future__ import annotations

from collections import Counter
from dataclasses import replace

import pytest

from critcat.fixtures import (
    SCALE_EXCEPTION_INDEX,
    SHOWSTOPPER_INDICES,
    load_fixtures,
)
from critcat.layers import DefineIntervals, Rate, Remove, RewordForScale, derive_layer2, derive_layer3
from critcat.model import (
    CriterionIndex,
    IntervalScale,
    LikertScale,
    NumericQuantity,
    NumericScale,
    Polarity,
    catalogue_stats,
    format_percent,
    validate_catalogue,
)

IDX = CriterionIndex.parse

REMOVED = {
    "2.9", "2.13", "2.18", "4.1", "5.1", "6.3", "7.2", "8.1", "9.1", "10.1",
    "14.1", "15.2", "17.1", "20.2", "22.2", "22.4", "22.6", "22.7",
}


@pytest.fixture(scope="module")
def fx():
    return load_fixtures()


@pytest.fixture(scope="module")
def derived(fx):
    layer2 = derive_layer2(fx.general_catalogue, fx.maas_refinement)
    return layer2, derive_layer3(layer2, fx.maas_weighting)


class TestGeneralCatalogue:
    def test_has_62_criteria_and_validates(self, fx):
        assert len(fx.general_catalogue.criteria) == 62
        assert fx.general_catalogue.layer == 1
        assert validate_catalogue(fx.general_catalogue).ok

    def test_category_counts(self, fx):
        counts = Counter(c.category for c in fx.general_catalogue.criteria)
        assert counts["Usability"] == 19
        assert counts["Documentation and support for different languages"] == 7
        assert counts["Costs"] == 3
        assert counts["Performance of the IT solution"] == 3

    def test_workers_category_discrepancy_is_as_documented(self, fx):
        # the category overview announces 4 items; the full list carries one
        workers = [
            c
            for c in fx.general_catalogue.criteria
            if c.category.startswith("Requirement of")
        ]
        assert len(workers) == 1
        assert str(workers[0].index) == "5.1"

    def test_indices_unique_and_question_equals_original(self, fx):
        for c in fx.general_catalogue.criteria:
            assert c.question == c.original_question


class TestRefinement:
    def test_removes_exactly_the_18_unmarked_rows(self, fx, derived):
        layer2, _ = derived
        assert len(layer2.criteria) == 44
        gone = {str(i) for i in fx.general_catalogue.indices} - {
            str(i) for i in layer2.indices
        }
        assert gone == REMOVED

    def test_every_removal_carries_a_justification(self, fx):
        removals = [d for d in fx.maas_refinement.directives if isinstance(d, Remove)]
        assert len(removals) == 18
        assert all(d.justification for d in removals)

    def test_rewording_keeps_original_question(self, derived):
        layer2, _ = derived
        reworded = layer2.criterion(IDX("2.4"))
        assert reworded.question == "How-time consuming is it to apply the first ML models?"
        assert reworded.original_question == "What is the training effort?"


class TestWeighting:
    def test_rating_histogram_and_sum(self, derived):
        _, layer3 = derived
        histogram = Counter(c.rating for c in layer3.criteria)
        assert histogram == {5: 6, 4: 15, 3: 7, 2: 6, 1: 10}
        assert sum(c.rating for c in layer3.criteria) == 133

    def test_rendered_percentages_match_the_published_column(self, derived):
        _, layer3 = derived
        expected = {5: "3,8%", 4: "3,0%", 3: "2,3%", 2: "1,5%", 1: "0,8%"}
        for c in layer3.criteria:
            assert format_percent(c.weight, "comma") == expected[c.rating]

    def test_exact_weights_sum_to_one(self, derived):
        _, layer3 = derived
        assert abs(sum(c.weight for c in layer3.criteria) - 1.0) <= 1e-9
        assert validate_catalogue(layer3).ok

    def test_showstoppers_are_exactly_the_four_marked_rows(self, derived):
        _, layer3 = derived
        stoppers = {str(c.index) for c in layer3.criteria if c.showstopper}
        assert stoppers == set(SHOWSTOPPER_INDICES)

    def test_numeric_kinds_and_interval_bins(self, fx, derived):
        _, layer3 = derived
        for index in ("3.1", "3.2"):
            criterion = layer3.criterion(IDX(index))
            assert isinstance(criterion.answer_kind, NumericQuantity)
            assert criterion.answer_kind.unit == "EUR"
            assert isinstance(criterion.scale, NumericScale)
            assert criterion.scale.polarity is Polarity.COST
        for index in ("1.2", "3.3", "4.2"):
            criterion = layer3.criterion(IDX(index))
            assert isinstance(criterion.scale, IntervalScale)
            assert len(criterion.scale.bins) == 3
        kinds = [d for d in fx.maas_weighting.directives if isinstance(d, RewordForScale)]
        assert {str(d.index) for d in kinds} == {"1.2", "3.1", "3.2", "3.3", "4.2"}
        bins = [d for d in fx.maas_weighting.directives if isinstance(d, DefineIntervals)]
        assert {str(d.index) for d in bins} == {"1.2", "3.3", "4.2"}

    def test_every_criterion_rated_exactly_once(self, fx):
        rates = [d for d in fx.maas_weighting.directives if isinstance(d, Rate)]
        assert len(rates) == 44
        assert len({str(d.index) for d in rates}) == 44


class TestExpectedCatalogue:
    def test_derivation_matches_except_the_scale_exception(self, fx, derived):
        _, layer3 = derived
        expected = fx.maas_expected_layer3
        assert len(layer3.criteria) == len(expected.criteria) == 44
        mismatches = [
            (a, b) for a, b in zip(layer3.criteria, expected.criteria) if a != b
        ]
        assert len(mismatches) == 1
        got, published = mismatches[0]
        assert got.index == published.index == SCALE_EXCEPTION_INDEX
        assert got == replace(published, scale=got.scale)

    def test_exception_row_is_likert_at_rating_3(self, fx):
        row = fx.maas_expected_layer3.criterion(SCALE_EXCEPTION_INDEX)
        assert row.rating == 3
        assert isinstance(row.scale, LikertScale)
        assert row.showstopper is False

    def test_metadata_and_provenance_match_the_derivation(self, fx, derived):
        _, layer3 = derived
        expected = fx.maas_expected_layer3
        assert (layer3.id, layer3.title, layer3.domain_label, layer3.context_label) == (
            expected.id,
            expected.title,
            expected.domain_label,
            expected.context_label,
        )
        assert layer3.provenance == expected.provenance

    def test_scale_tally_and_partition(self, fx, derived):
        _, layer3 = derived
        expected_stats = catalogue_stats(fx.maas_expected_layer3)
        assert (expected_stats.n_total, expected_stats.n_numeric,
                expected_stats.n_boolean, expected_stats.n_likert) == (44, 5, 24, 15)
        derived_stats = catalogue_stats(layer3)
        # the engine maps the exception row to boolean, shifting one count
        assert (derived_stats.n_total, derived_stats.n_numeric,
                derived_stats.n_boolean, derived_stats.n_likert) == (44, 5, 25, 14)
        for stats in (expected_stats, derived_stats):
            assert stats.n_total == stats.n_numeric + stats.n_boolean + stats.n_likert

    def test_reliability_row_follows_the_table_not_the_prose(self, fx):
        # discussed as a showstopper in prose, listed as likert at rating 5
        row = fx.maas_expected_layer3.criterion(IDX("15.1"))
        assert row.showstopper is False
        assert isinstance(row.scale, LikertScale)
        assert row.rating == 5
