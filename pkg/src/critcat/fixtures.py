"""Shipped fixtures: the 62-item general criteria catalogue and the complete
MaaS/SME derivation (refinement script, weighting script, expected final
catalogue).

The wordings, categories, justifications, ratings, showstopper marks and
scale labels are transcribed verbatim from the published criteria list,
including its typos. Interval bin edges are not part of that source; the
shipped bins are illustrative placeholders and are excluded from conformance
checks against the source table.

Known quirks of the source, preserved as data:

* item 23.1 is rated 3 yet carries a likert scale, which the scale rule set
  would map to boolean; the derivation engine therefore produces boolean for
  it and the expected catalogue keeps likert.
* the category overview claims 4 items for the workers/skills category, but
  the full list contains a single such item (5.1).
* reliability (15.1) is discussed as a showstopper in prose but listed with a
  likert scale at rating 5; the fixture follows the list (not a showstopper).
"""

from __future__ import annotations

from dataclasses import dataclass

from .layers import (
    DefineIntervals,
    DerivationScript,
    MarkShowstopper,
    ProvenanceNote,
    Rate,
    Remove,
    Reword,
    RewordForScale,
    SCALE_RULE_NOTE,
)
from .model import (
    BooleanScale,
    Catalogue,
    Criterion,
    CriterionIndex,
    IntervalBin,
    IntervalScale,
    LikertScale,
    NumericQuantity,
    NumericScale,
    Polarity,
    Qualitative,
)

GENERAL_ID = "general-software-criteria"
MAAS_LAYER2_ID = "maas-criteria"
MAAS_LAYER3_ID = "maas-sme-criteria"

GENERAL_TITLE = "Criteria catalogue for general software solutions"
MAAS_TITLE = "Criteria catalogue for MaaS platforms"
MAAS_SME_TITLE = "Criteria catalogue for MaaS platforms (SME context)"

# The engine's rule set maps rating 3 to boolean; the source list shows
# likert for 23.1. Conformance checks assert exactly this one exception.
SCALE_EXCEPTION_INDEX = CriterionIndex(23, 1)

# Indices marked as showstoppers in the source justifications.
SHOWSTOPPER_INDICES = ("1.1", "18.1", "20.1", "21.1")


@dataclass(frozen=True)
class _Row:
    """One source-table row: general wording plus the MaaS/SME columns."""

    index: str
    category: str
    question: str
    domain_question: str | None  # None when the row is not in the final list
    justification: str
    rating: int | None
    showstopper: bool
    scale: str | None  # boolean | likert | numeric | intervals


_ROWS: tuple[_Row, ...] = (
    _Row(
        "1.1",
        "Functionality",
        "What added value does the IT solution bring to the business?",
        "What added value does the IT solution bring to the business?",
        "SMEs do not have the resources to experiment on a long-term basis (showstopper).",
        5,
        True,
        "boolean",
    ),
    _Row(
        "1.2",
        "Functionality",
        "What is the time to availability?",
        "How long does it take for compute resources, trained models, or predict requests to be available or processed?",
        "SMEs do not primarily use MaaS for time-critical applications.",
        2,
        False,
        "intervals",
    ),
    _Row(
        "2.1",
        "Usability",
        "Is the user interface intuitive?",
        "Is the user interface intuitive?",
        "Non-experts need intuitive UI.",
        4,
        False,
        "likert",
    ),
    _Row(
        "2.2",
        "Usability",
        "Does the dialog only show user information related to the completion of the work item?",
        "Does the dialog only show user information related to the completion of the work item?",
        "Non-experts are otherwise overwhelmed.",
        3,
        False,
        "boolean",
    ),
    _Row(
        "2.3",
        "Usability",
        "How helpful is contextual help?",
        "How helpful is contextual help?",
        "Non-experts need help.",
        4,
        False,
        "likert",
    ),
    _Row(
        "2.4",
        "Usability",
        "What is the training effort?",
        "How-time consuming is it to apply the first ML models?",
        "SMEs do not have the resources to experiment on a long-term basis.",
        4,
        False,
        "likert",
    ),
    _Row(
        "2.5",
        "Usability",
        "Is there support for recurring tasks (e.g. macros; in MaaS context: pipeline)?",
        "Can recurring ML flows be stored in pipelines and run repeatedly?",
        "Rare use of complex pipelines.",
        1,
        False,
        "boolean",
    ),
    _Row(
        "2.6",
        "Usability",
        "Are there undo-features?",
        "Are there undo-features?",
        "It is customary and user-friendly to have this option.",
        1,
        False,
        "boolean",
    ),
    _Row(
        "2.7",
        "Usability",
        "Self-description capability: How useful and instructive is feedback?",
        "Self-description capability: How useful and instructive is feedback?",
        "Non-experts need help.",
        4,
        False,
        "likert",
    ),
    _Row(
        "2.8",
        "Usability",
        "Self-description capability: Are there further inquiries for important operations?",
        "Self-description capability: Are there further inquiries for important operations?",
        "Non-experts are not as experienced as experts when it comes to serious decisions.",
        3,
        False,
        "boolean",
    ),
    _Row(
        "2.9",
        "Usability",
        "Is it possible to resume at the starting point after interruption?",
        None,
        "In cloud context, it is typical for IT systems or services to run nearly perpetually.",
        None,
        False,
        None,
    ),
    _Row(
        "2.10",
        "Usability",
        "Is it possible to recover last deleted objects?",
        "Can deleted workflows or ML models be restored?",
        "Rare use of complex pipelines.",
        1,
        False,
        "boolean",
    ),
    _Row(
        "2.11",
        "Usability",
        "Expectation conformity: Are the comprehension requirements of the dialog consistent with the user's knowledge?",
        "Expectation conformity: Are the comprehension requirements of the dialog consistent with the user's knowledge?",
        "Overchallenged users are likely to make mistakes.",
        3,
        False,
        "boolean",
    ),
    _Row(
        "2.12",
        "Usability",
        "Expectation conformity: Is vocabulary used the user is familiar with?",
        "Expectation conformity: Is vocabulary used the user is familiar with?",
        "Familiar vocabulary is user-friendly and reduces the risk of maloperation.",
        3,
        False,
        "boolean",
    ),
    _Row(
        "2.13",
        "Usability",
        "Conformity of expectations: Are dialogues for similar work tasks designed similarly?",
        None,
        "In our opinion, helpful tooltips (2.3) provide better assistance.",
        None,
        False,
        None,
    ),
    _Row(
        "2.14",
        "Usability",
        "Expectation conformity: Do system responses occur immediately?",
        "Expectation conformity: Do system responses occur immediately?",
        "This allows for immediate correction of incorrect user input.",
        3,
        False,
        "boolean",
    ),
    _Row(
        "2.15",
        "Usability",
        "Fault tolerance: How useful are display and explanations of input errors?",
        "Fault tolerance: How useful are display and explanations of input errors?",
        "Non-experts need help.",
        4,
        False,
        "likert",
    ),
    _Row(
        "2.16",
        "Usability",
        "Fault tolerance: Is input data checked for validity and confirmed before use?",
        "To what extent does the service check the incoming data for compatibility with the training phase?",
        "Non-experts need help.",
        4,
        False,
        "likert",
    ),
    _Row(
        "2.17",
        "Usability",
        "Customizability: Are settings adapted to specific needs and capabilities of the user?",
        "Is prior knowledge of machine learning adequately addressed?",
        "Typically, considered SMEs do not have multiple users with varying knowledge of machine learning.",
        1,
        False,
        "boolean",
    ),
    _Row(
        "2.18",
        "Usability",
        "Customizability: Is adaptation to language, knowledge, cultural peculiarities (e.g. key-binding), motoric skills and perceptual capacity of the user possible?",
        None,
        "Machine learning is a field which is deeply penetrated by English language and conventions.",
        None,
        False,
        None,
    ),
    _Row(
        "2.19",
        "Usability",
        "Customizability: Can output be presented individually?",
        "Can results be displayed differently, for example by different error measures?",
        "Too detailed for the beginner.",
        2,
        False,
        "boolean",
    ),
    _Row(
        "3.1",
        "Costs",
        "What are one-time vs. ongoing costs?",
        "What are one-time vs. ongoing costs?",
        "Generally, SMEs are cost-conscious. This not only applies to one-time costs but also to ongoing costs.",
        4,
        False,
        "numeric",
    ),
    _Row(
        "3.2",
        "Costs",
        "What is the total cost of ownership (TCO) for the IT solution?",
        "What is the total cost of ownership (TCO) for the IT solution?",
        "Limited budget.",
        4,
        False,
        "numeric",
    ),
    _Row(
        "3.3",
        "Costs",
        "What is the near-term vs. long-term Return of Investment?",
        "What is the near-term vs. long-term Return of Investment?",
        "Financial lean period due to limited reserves inappropriate.",
        4,
        False,
        "intervals",
    ),
    _Row(
        "4.1",
        "Performance of the IT solution",
        "Does the IT solution run at decent speed on standard local hardware?",
        None,
        "No installation of software needed.",
        None,
        False,
        None,
    ),
    _Row(
        "4.2",
        "Performance of the IT solution",
        "What is the handling time?",
        "How much time does the training of the models take?",
        "SMEs do not primarily use MaaS for time-critical applications.",
        2,
        False,
        "intervals",
    ),
    _Row(
        "4.3",
        "Performance of the IT solution",
        "Reliability: Does the system deliver correct results?",
        "How is ensured that the system learns the right thing?",
        "Non-experts otherwise overestimate the capabilities of the application.",
        5,
        False,
        "likert",
    ),
    _Row(
        "5.1",
        "Requirement of manpower and knowledge/ability",
        "Does the IT solution require a high level of manpower (including rare knowledge/skills)?",
        None,
        "In MaaS context, users can decide on their own, how much manpower they want to put into the tool.",
        None,
        False,
        None,
    ),
    _Row(
        "6.1",
        "Scalability",
        "Can the IT solution increase its output by adding additional resources (typically hardware) to handle the increased load?",
        "Can the service scale hardware sufficiently to create more powerful models or handle more predict calls?",
        "Data volume does not change dramatically in SMEs over time.",
        2,
        False,
        "boolean",
    ),
    _Row(
        "6.2",
        "Scalability",
        "Further development: Can the existing solution be further developed?",
        "Can trained models be refined manually?",
        "No ML experts available in SMEs.",
        1,
        False,
        "boolean",
    ),
    _Row(
        "6.3",
        "Scalability",
        "Testability: What is the effort required to test the modified software?",
        None,
        "Updates and patches in cloud environment are backwards compatible and automatically installed on service side.",
        None,
        False,
        None,
    ),
    _Row(
        "7.1",
        "Agility, flexibility, adaptability",
        "Can the IT solution be easily and quickly adapted to new requirements (e.g. without programming)?",
        "Can the IT solution be easily and quickly adapted to new requirements, such as more data points or attributes?",
        "Data type does not change dramatically in SMEs over time.",
        2,
        False,
        "boolean",
    ),
    _Row(
        "7.2",
        "Agility, flexibility, adaptability",
        "Modifiability: What is the effort to perform improvements, troubleshooting, or adapt to environmental changes?",
        None,
        "Elimination of errors and improvements in cloud environment are automatically carried out on service side.",
        None,
        False,
        None,
    ),
    _Row(
        "8.1",
        "Modularity",
        "Does the IT solution have a modular or monolithic architecture?",
        None,
        "Users do not maintain or extend the product.",
        None,
        False,
        None,
    ),
    _Row(
        "9.1",
        "Serviceability",
        "Is it easy to install, operate, maintain, and upgrade the IT solution?",
        None,
        "Maintenance, upgrades and running are performed as a service by the cloud service.",
        None,
        False,
        None,
    ),
    _Row(
        "10.1",
        "Portability",
        "Is it possible to transfer the software to another system environment?",
        None,
        "MaaS tools are accessed through a web browser, hence no transfer of software is needed.",
        None,
        False,
        None,
    ),
    _Row(
        "11.1",
        "Interfaces",
        "Does the IT solution offer open or proprietary interfaces to connect to other IT solutions?",
        "To what extent does the IT solution provide open or proprietary interfaces to read data or receive predict calls?",
        "Interfaces make the MaaS application user-friendly.",
        4,
        False,
        "likert",
    ),
    _Row(
        "11.2",
        "Interfaces",
        "Can machine learning models be exported?",
        "Can machine learning models be exported?",
        "No ML experts available in SMEs that maintain models locally.",
        1,
        False,
        "boolean",
    ),
    _Row(
        "12.1",
        "Interoperability",
        "Can the IT solution work easily smoothly with other IT solutions (e.g. through standard interfaces and data models)?",
        "Can the IT solution work easily smoothly with other IT solutions (e.g. through standard interfaces and data models)?",
        "Own interface development is too complex.",
        4,
        False,
        "likert",
    ),
    _Row(
        "13.1",
        "Multi-client capability",
        "Does the IT solution offer the ability to set up multiple clients (such as company codes) that can run independently?",
        "Is it possible to create multiple parallel ML workflows and/or train models independently of each other at the same time?",
        "No ML experts available in SMEs.",
        1,
        False,
        "boolean",
    ),
    _Row(
        "14.1",
        "Cloud capability",
        "Can the IT solution be operated as a private or public cloud solution (Software as a Service, Platform as a Service)?",
        None,
        "Obviously, we consider only cloud services.",
        None,
        False,
        None,
    ),
    _Row(
        "15.1",
        "Maturity, reliability, fault tolerance",
        "How mature, reliable, or fault-tolerant is the IT solution (e.g. restart without data loss after failure)?",
        "How mature, reliable, or fault-tolerant is the IT solution (e.g. restart without data loss after failure)?",
        "No resources to deal with ever-changing platform conditions.",
        5,
        False,
        "likert",
    ),
    _Row(
        "15.2",
        "Maturity, reliability, fault tolerance",
        "How proven is the software in the short-term vs in the long term?",
        None,
        "MaaS solutions are in continuous change and brisk adoption by practitioners was not long ago.",
        None,
        False,
        None,
    ),
    _Row(
        "16.1",
        "Sustainability",
        "Will the IT solution be further developed and supported by the IT solution provider in the medium to long term?",
        "Are new ML features like new model types added?",
        "Standard procedures are sufficient.",
        1,
        False,
        "boolean",
    ),
    _Row(
        "16.2",
        "Sustainability",
        "How frequency are there updates?",
        "To what extent is support provided?",
        "Support cannot be provided independently.",
        4,
        False,
        "likert",
    ),
    _Row(
        "16.3",
        "Sustainability",
        "Are new features or bug fixes implemented?",
        "Are new features or bug fixes implemented?",
        "Standard procedures are sufficient.",
        1,
        False,
        "boolean",
    ),
    _Row(
        "17.1",
        "Compliance with enterprise IT architecture",
        "Does the IT solution meet the standards set by your organization's enterprise IT architecture?",
        None,
        "The service is performed in an environment outside the company.",
        None,
        False,
        None,
    ),
    _Row(
        "18.1",
        "Compliance with laws and regulations",
        "Does the IT solution meet all relevant legal and regulatory requirements (e.g. principles of sound accounting)?",
        "Does the IT solution meet all relevant legal and regulatory requirements (e.g. principles of sound accounting)?",
        "Applies to any company (showstopper).",
        5,
        True,
        "boolean",
    ),
    _Row(
        "19.1",
        "IT governance",
        "Does the IT solution adequately support IT governance requirements?",
        "Does the IT solution adequately support IT governance?",
        "Even SMEs need basic IT governance aspects.",
        2,
        False,
        "boolean",
    ),
    _Row(
        "20.1",
        "Information security",
        "Does the IT solution's information security architecture provide adequate protection against information security threats?",
        "Does the IT solution's information security architecture provide adequate protection against information security threats?",
        "Applies to any company (showstopper).",
        5,
        True,
        "boolean",
    ),
    _Row(
        "20.2",
        "Information security",
        "Analysability: What is the effort required to diagnose defects or causes of failure or to determine parts in need of change?",
        None,
        "Troubleshooting and maintenance are performed as a service by the cloud service.",
        None,
        False,
        None,
    ),
    _Row(
        "20.3",
        "Information security",
        "Are there versioning features and historical views of the data?",
        "Are there versioning features and historical views of the data?",
        "Standard settings are sufficient.",
        1,
        False,
        "boolean",
    ),
    _Row(
        "21.1",
        "Data privacy",
        "Does the IT solution adequately protect corporate data (personal data, customer data, intellectual property)?",
        "Does the IT solution adequately protect corporate data (personal data, customer data, intellectual property)?",
        "Applies to any company (showstopper).",
        5,
        True,
        "boolean",
    ),
    _Row(
        "22.1",
        "Documentation and support for different languages",
        "How good is the documentation of the IT solution for users and operators? In which languages is the documentation available?",
        "How good is the documentation of the IT solution for users and operators? In which languages is the documentation available?",
        "Non-expert needs good documentation.",
        4,
        False,
        "likert",
    ),
    _Row(
        "22.2",
        "Documentation and support for different languages",
        "Is there a programmer documentation (description of source code)?",
        None,
        "The majority of MaaS providers are private businesses operating with a view to gain, thus keeping source code private.",
        None,
        False,
        None,
    ),
    _Row(
        "22.3",
        "Documentation and support for different languages",
        "Method documentation: Are mathematical algorithms, technical-scientific or commercial methods properly described?",
        "How well are the methods used (e.g. cross-validation) and AI algorithms or their results described and explained?",
        "Non-expert needs help.",
        4,
        False,
        "likert",
    ),
    _Row(
        "22.4",
        "Documentation and support for different languages",
        "Is required hardware, software, possible operating systems, standard libraries or runtime systems, installation, updates and deinstallation properly described?",
        None,
        "No installation needed since this is performed as a service by the cloud service.",
        None,
        False,
        None,
    ),
    _Row(
        "22.5",
        "Documentation and support for different languages",
        "Is there a data documentation (formats, data types, restrictions, import and export interfaces)?",
        "Is there a data documentation (formats, data types, restrictions, import and export interfaces)?",
        "Non-expert needs help.",
        4,
        False,
        "likert",
    ),
    _Row(
        "22.6",
        "Documentation and support for different languages",
        "Is there a test documentation?",
        None,
        "Users generally are not concerned with software tests.",
        None,
        False,
        None,
    ),
    _Row(
        "22.7",
        "Documentation and support for different languages",
        "Is there a development documentation?",
        None,
        "Users generally are not integrated in the development process.",
        None,
        False,
        None,
    ),
    _Row(
        "23.1",
        "Innovative character",
        "How common is the solution in the market?",
        "How common is the solution in the market?",
        "Users could get help in online communities if solution is widely used in market.",
        3,
        False,
        "likert",
    ),
    _Row(
        "24.1",
        "Manufacturer dependency",
        "Does using the solution make you tied to a single manufacturer?",
        "Does using the solution make you tied to a single manufacturer?",
        "Changing the platform at your own request unlikely.",
        3,
        False,
        "boolean",
    ),
)


# Units and polarities for the numerically answered criteria; the source
# never states them, so these are artifact-level choices.
_NUMERIC_KINDS: dict[str, NumericQuantity] = {
    "1.2": NumericQuantity(unit="minutes", polarity=Polarity.COST),
    "3.1": NumericQuantity(unit="EUR", polarity=Polarity.COST),
    "3.2": NumericQuantity(unit="EUR", polarity=Polarity.COST),
    "3.3": NumericQuantity(unit="% annual return", polarity=Polarity.BENEFIT),
    "4.2": NumericQuantity(unit="hours", polarity=Polarity.COST),
}

# Illustrative three-bin definitions (worst to best) for the intervals-scaled
# criteria; the bin edges are placeholders, not sourced values.
_INTERVAL_BINS: dict[str, tuple[IntervalBin, ...]] = {
    "1.2": (
        IntervalBin("more than 60 minutes", 60.0, float("inf")),
        IntervalBin("10 to 60 minutes", 10.0, 60.0),
        IntervalBin("under 10 minutes", 0.0, 10.0),
    ),
    "3.3": (
        IntervalBin("below 5 %", float("-inf"), 5.0),
        IntervalBin("5 to 15 %", 5.0, 15.0),
        IntervalBin("above 15 %", 15.0, float("inf")),
    ),
    "4.2": (
        IntervalBin("more than 24 hours", 24.0, float("inf")),
        IntervalBin("1 to 24 hours", 1.0, 24.0),
        IntervalBin("under 1 hour", 0.0, 1.0),
    ),
}


@dataclass(frozen=True)
class FixtureSet:
    general_catalogue: Catalogue
    maas_refinement: DerivationScript
    maas_weighting: DerivationScript
    maas_expected_layer3: Catalogue


def general_catalogue() -> Catalogue:
    """The 62-item layer-1 catalogue of general software criteria."""
    criteria = tuple(
        Criterion(
            index=CriterionIndex.parse(row.index),
            category=row.category,
            question=row.question,
            original_question=row.question,
            answer_kind=Qualitative(),
        )
        for row in _ROWS
    )
    return Catalogue(
        id=GENERAL_ID,
        layer=1,
        title=GENERAL_TITLE,
        domain_label="",
        context_label="",
        criteria=criteria,
        provenance=(),
        version=1,
    )


def maas_refinement_script() -> DerivationScript:
    """Refinement to the MaaS domain: 18 removals plus the reformulations."""
    directives = []
    for row in _ROWS:
        index = CriterionIndex.parse(row.index)
        if row.domain_question is None:
            directives.append(Remove(index=index, justification=row.justification))
        elif row.domain_question != row.question:
            directives.append(Reword(index=index, new_question=row.domain_question))
    return DerivationScript(
        target_layer=2,
        directives=tuple(directives),
        new_id=MAAS_LAYER2_ID,
        new_title=MAAS_TITLE,
        domain_label="MaaS",
    )


def maas_weighting_script() -> DerivationScript:
    """Weighting for the SME context: numeric kinds, interval bins,
    showstopper marks, and one rating per criterion."""
    directives = []
    for row in _ROWS:
        if row.domain_question is not None and row.index in _NUMERIC_KINDS:
            directives.append(
                RewordForScale(
                    index=CriterionIndex.parse(row.index),
                    new_question=row.domain_question,
                    new_answer_kind=_NUMERIC_KINDS[row.index],
                )
            )
    for index, bins in _INTERVAL_BINS.items():
        directives.append(DefineIntervals(index=CriterionIndex.parse(index), bins=bins))
    for index in SHOWSTOPPER_INDICES:
        directives.append(MarkShowstopper(index=CriterionIndex.parse(index), flag=True))
    for row in _ROWS:
        if row.rating is not None:
            directives.append(
                Rate(
                    index=CriterionIndex.parse(row.index),
                    rating=row.rating,
                    justification=row.justification,
                )
            )
    return DerivationScript(
        target_layer=3,
        directives=tuple(directives),
        new_id=MAAS_LAYER3_ID,
        new_title=MAAS_SME_TITLE,
        context_label="SME",
    )


def _scale_for_row(row: _Row):
    if row.scale == "boolean":
        return BooleanScale()
    if row.scale == "likert":
        return LikertScale()
    kind = _NUMERIC_KINDS[row.index]
    if row.scale == "numeric":
        return NumericScale(unit=kind.unit, polarity=kind.polarity)
    return IntervalScale(_INTERVAL_BINS[row.index])


def maas_expected_layer3() -> Catalogue:
    """The final MaaS/SME catalogue exactly as published (23.1 stays likert)."""
    kept = [row for row in _ROWS if row.domain_question is not None]
    total = sum(row.rating for row in kept)
    criteria = tuple(
        Criterion(
            index=CriterionIndex.parse(row.index),
            category=row.category,
            question=row.domain_question,
            original_question=row.question,
            answer_kind=_NUMERIC_KINDS.get(row.index, Qualitative()),
            rating=row.rating,
            showstopper=row.showstopper,
            scale=_scale_for_row(row),
            weight=row.rating / total,
            justification=row.justification,
        )
        for row in kept
    )
    return Catalogue(
        id=MAAS_LAYER3_ID,
        layer=3,
        title=MAAS_SME_TITLE,
        domain_label="MaaS",
        context_label="SME",
        criteria=criteria,
        provenance=(ProvenanceNote(SCALE_RULE_NOTE), *maas_weighting_script().directives),
        version=1,
    )


def load_fixtures() -> FixtureSet:
    """All shipped fixtures, built fresh from the embedded source table."""
    return FixtureSet(
        general_catalogue=general_catalogue(),
        maas_refinement=maas_refinement_script(),
        maas_weighting=maas_weighting_script(),
        maas_expected_layer3=maas_expected_layer3(),
    )
