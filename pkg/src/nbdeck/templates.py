"""Built-in presentation outline templates.

Both audiences share the same 17 subsections; the non-technical variant
moves the deep-dive material (EDA, cleaning, feature engineering, model
alternatives and details) into trailing appendix groups. Auto sections
carry a natural-language query used to locate matching code cells; prompt
sections ship editable How-To and example seed text for the presenter to
replace.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

TEMPLATE_VERSION = "1"

DEFAULT_K = 3


@dataclass(frozen=True)
class SectionSpec:
    id: str
    title: str
    parent_section: str
    mode: str  # "auto" | "prompt"
    k: int = DEFAULT_K
    query: str = ""
    prompt_body: str = ""


@dataclass(frozen=True)
class OutlineTemplate:
    audience: str
    sections: tuple[SectionSpec, ...]
    version: str = TEMPLATE_VERSION

    def auto_sections(self) -> list[SectionSpec]:
        return [s for s in self.sections if s.mode == "auto"]

    def section(self, section_id: str) -> SectionSpec:
        for spec in self.sections:
            if spec.id == section_id:
                return spec
        raise KeyError(section_id)


_QUERIES = {
    "data_source": "Data source. Load the dataset from a csv file or url.",
    "exploratory_data_analysis": (
        "Exploratory data analysis. "
        "Plot distributions and correlation statistics of the dataset."
    ),
    "data_cleaning": (
        "Data cleaning. Handle missing values, drop duplicates and outliers."
    ),
    "feature_engineering": (
        "Feature engineering. Create, transform, encode and scale features."
    ),
    "model_input": (
        "Model input. Select input features and split training and test data."
    ),
    "model_output": (
        "Model output. Fit the model and predict labels on the test set."
    ),
    "optimization_goal": (
        "Optimization goal. "
        "Tune hyperparameters to maximize the cross validation score of the models."
    ),
    "metrics": (
        "Evaluation metrics. "
        "Compute accuracy, precision, recall and F1 score of the models."
    ),
    "performance": (
        "Model performance. Compare model scores and report the best result."
    ),
    "model_details": (
        "Model details. "
        "Configure the classifiers and the parameters of the models."
    ),
}

_PROMPTS = {
    "purpose_and_intended_use": (
        "How-To: state the business problem, why the work was done and who "
        "will use the results.\n"
        "Example: predict which customers are likely to leave so the "
        "retention team can prioritize offers."
    ),
    "workflow": (
        "How-To: walk through the stages of the project from raw data to "
        "the delivered model.\n"
        "Example: collect data, clean it, engineer features, train "
        "candidate models, evaluate and pick a winner."
    ),
    "model_alternatives": (
        "How-To: list the model families you tried or considered and why "
        "the final one won.\n"
        "Example: compared a linear baseline against tree ensembles; the "
        "ensemble won on validation score."
    ),
    "model_interpretation": (
        "How-To: explain what drives the model's predictions in terms the "
        "audience already knows.\n"
        "Example: the top three features account for most of the "
        "prediction weight."
    ),
    "suggestions": (
        "How-To: recommend concrete next steps and how the results should "
        "be used.\n"
        "Example: pilot the model on next quarter's data and review its "
        "errors monthly."
    ),
    "ethical_legal_considerations": (
        "How-To: note data licensing, privacy constraints and possible "
        "harms of acting on the predictions.\n"
        "Example: the dataset is public and anonymized; predictions should "
        "not be the sole basis for decisions."
    ),
    "limitation_risks": (
        "How-To: state where the model is unreliable and what could break "
        "it in production.\n"
        "Example: trained on a single snapshot of data; quality degrades "
        "if the input distribution drifts."
    ),
}

_TITLES = {
    "purpose_and_intended_use": "Purpose and Intended use",
    "workflow": "Workflow",
    "data_source": "Data Source",
    "exploratory_data_analysis": "Exploratory Data Analysis",
    "data_cleaning": "Data Cleaning",
    "feature_engineering": "Feature Engineering",
    "model_input": "Model Input",
    "model_output": "Model Output",
    "optimization_goal": "Optimization Goal",
    "model_alternatives": "Model Alternatives",
    "model_details": "Model Details",
    "metrics": "Metrics",
    "performance": "Performance",
    "model_interpretation": "Model Interpretation",
    "suggestions": "Suggestions",
    "ethical_legal_considerations": "Ethical & Legal considerations",
    "limitation_risks": "Limitation & Risks",
}

# Most sections locate up to three cells; data source gets a single one.
_K_OVERRIDES = {"data_source": 1}

_TECHNICAL_LAYOUT = (
    ("Introduction", ("purpose_and_intended_use", "workflow")),
    ("Data", ("data_source", "exploratory_data_analysis", "data_cleaning",
              "feature_engineering")),
    ("Model", ("model_input", "model_output", "optimization_goal",
               "model_alternatives", "model_details")),
    ("Model Performance", ("metrics", "performance", "model_interpretation")),
    ("Conclusion", ("suggestions", "ethical_legal_considerations",
                    "limitation_risks")),
)

_NONTECHNICAL_LAYOUT = (
    ("Introduction", ("purpose_and_intended_use", "workflow", "data_source")),
    ("Model", ("model_input", "model_output", "optimization_goal")),
    ("Model Performance", ("metrics", "performance", "model_interpretation")),
    ("Conclusion", ("suggestions", "ethical_legal_considerations",
                    "limitation_risks")),
    ("Appendix: Data", ("exploratory_data_analysis", "data_cleaning",
                        "feature_engineering")),
    ("Appendix: Model", ("model_alternatives", "model_details")),
)


def _build(audience: str, layout) -> OutlineTemplate:
    sections = []
    for parent, ids in layout:
        for section_id in ids:
            if section_id in _QUERIES:
                sections.append(
                    SectionSpec(
                        id=section_id,
                        title=_TITLES[section_id],
                        parent_section=parent,
                        mode="auto",
                        k=_K_OVERRIDES.get(section_id, DEFAULT_K),
                        query=_QUERIES[section_id],
                    )
                )
            else:
                sections.append(
                    SectionSpec(
                        id=section_id,
                        title=_TITLES[section_id],
                        parent_section=parent,
                        mode="prompt",
                        prompt_body=_PROMPTS[section_id],
                    )
                )
    return OutlineTemplate(audience=audience, sections=tuple(sections))


_TEMPLATES = {
    "technical": _build("technical", _TECHNICAL_LAYOUT),
    "nontechnical": _build("nontechnical", _NONTECHNICAL_LAYOUT),
}


def template_for(audience: str) -> OutlineTemplate:
    try:
        return _TEMPLATES[audience]
    except KeyError:
        raise ValueError(f"unknown audience {audience!r}") from None


def load_template(path) -> OutlineTemplate:
    """Load a template override file (JSON, schema documented in README)."""
    with open(path, encoding="utf-8") as handle:
        payload = json.load(handle)
    sections = []
    for entry in payload["sections"]:
        spec = SectionSpec(
            id=entry["id"],
            title=entry["title"],
            parent_section=entry.get("parent_section", ""),
            mode=entry["mode"],
            k=int(entry.get("k", DEFAULT_K)),
            query=entry.get("query", ""),
            prompt_body=entry.get("prompt_body", ""),
        )
        if spec.mode == "auto" and not spec.query.strip():
            raise ValueError(f"auto section {spec.id!r} needs a non-empty query")
        if spec.mode == "prompt" and not spec.prompt_body.strip():
            raise ValueError(f"prompt section {spec.id!r} needs a prompt body")
        if spec.mode not in ("auto", "prompt"):
            raise ValueError(f"section {spec.id!r} has unknown mode {spec.mode!r}")
        if spec.k < 1:
            raise ValueError(f"section {spec.id!r} has k < 1")
        sections.append(spec)
    return OutlineTemplate(
        audience=payload.get("audience", "technical"),
        sections=tuple(sections),
        version=str(payload.get("version", TEMPLATE_VERSION)),
    )
