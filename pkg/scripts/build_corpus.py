#!/usr/bin/env python3
"""Regenerate the bundled demo and robustness-corpus notebooks.

The files under notebooks/ are committed; rerun this script only when the
fixtures themselves need to change. Content is fully deterministic.
"""

from __future__ import annotations

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
NB_DIR = ROOT / "notebooks"
CORPUS_DIR = NB_DIR / "corpus"

PNG_1PX = (
    "iVBORw0KGgoAAAANSUhEUgAAAAEAAAABCAYAAAAfFcSJAAAADUlEQVR42mP8"
    "z8BQDwAEhQGAhKmMIQAAAABJRU5ErkJggg=="
)


def md(source):
    return {"cell_type": "markdown", "metadata": {}, "source": source}


def raw(source):
    return {"cell_type": "raw", "metadata": {}, "source": source}


def code(source, outputs=None, count=None):
    return {
        "cell_type": "code",
        "metadata": {},
        "source": source,
        "outputs": outputs or [],
        "execution_count": count,
    }


def png_output():
    return {
        "output_type": "display_data",
        "data": {"image/png": PNG_1PX, "text/plain": "<Figure size 640x480>"},
        "metadata": {},
    }


def table_output(headers, rows):
    cells = "".join(f"<th>{h}</th>" for h in headers)
    body = "".join(
        "<tr>" + "".join(f"<td>{v}</td>" for v in row) + "</tr>" for row in rows
    )
    html = f"<table><thead><tr>{cells}</tr></thead><tbody>{body}</tbody></table>"
    return {
        "output_type": "execute_result",
        "data": {"text/html": html, "text/plain": "[dataframe]"},
        "metadata": {},
        "execution_count": 1,
    }


def text_output(text):
    return {
        "output_type": "execute_result",
        "data": {"text/plain": text},
        "metadata": {},
        "execution_count": 1,
    }


def notebook(cells):
    return {
        "cells": cells,
        "metadata": {
            "kernelspec": {
                "display_name": "Python 3",
                "language": "python",
                "name": "python3",
            },
            "language_info": {"name": "python", "version": "3.10"},
        },
        "nbformat": 4,
        "nbformat_minor": 5,
    }


def write(path, cells):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(notebook(cells), indent=1) + "\n", encoding="utf-8")
    n_code = sum(1 for c in cells if c["cell_type"] == "code")
    print(f"{path.relative_to(ROOT)}: {len(cells)} cells ({n_code} code)")


def wine_quality():
    """Four-section red wine workflow; exactly 19 code cells."""
    cells = [
        md(
            "# Red Wine Quality Prediction\n"
            "\n"
            "The red wine dataset contains physicochemical measurements "
            "(acidity, sugar, sulphates, alcohol and so on) for 1599 red "
            "wines together with a sensory quality score from 0 to 10 given "
            "by human tasters. The goal of this notebook is to build models "
            "that predict whether a wine is good or bad from its "
            "measurements."
        ),
        md("## Exploratory Data Analysis"),
        code(
            "# load the red wine dataset from the csv file\n"
            "import pandas as pd\n"
            "import numpy as np\n"
            "df = pd.read_csv('winequality-red.csv')\n"
            "df.head()",
            [table_output(
                ["fixed acidity", "volatile acidity", "alcohol", "quality"],
                [[7.4, 0.70, 9.4, 5], [7.8, 0.88, 9.8, 5]],
            )],
            1,
        ),
        code(
            "# summary statistics of every column in the dataset\n"
            "df.describe()",
            [table_output(["alcohol", "quality"], [[10.42, 5.64], [1.07, 0.81]])],
            2,
        ),
        code(
            "# plot the distribution of the quality scores\n"
            "import seaborn as sns\n"
            "import matplotlib.pyplot as plt\n"
            "sns.countplot(x='quality', data=df)\n"
            "plt.show()",
            [png_output()],
            3,
        ),
        code(
            "# create a heatmap using the correlation matrix\n"
            "plt.figure(figsize=(12, 9))\n"
            "sns.heatmap(df.corr(), annot=True, cmap='coolwarm')\n"
            "plt.show()",
            [png_output()],
            4,
        ),
        code(
            "# plot alcohol content against quality as a boxplot\n"
            "sns.boxplot(x='quality', y='alcohol', data=df)\n"
            "plt.show()",
            [png_output()],
            5,
        ),
        md("## Data Preprocessing"),
        code(
            "# check for missing values in each column\n"
            "df.isnull().sum()",
            [text_output("fixed acidity    0\nvolatile acidity 0\ndtype: int64")],
            6,
        ),
        code(
            "# drop duplicated rows from the dataset\n"
            "df = df.drop_duplicates()\n"
            "df.shape",
            [text_output("(1359, 12)")],
            7,
        ),
        code(
            "# binarize the quality score into good and bad wine labels\n"
            "bins = (2, 6.5, 8)\n"
            "labels = ['bad', 'good']\n"
            "df['quality'] = pd.cut(df['quality'], bins=bins, labels=labels)",
            [],
            8,
        ),
        code(
            "# encode the wine quality labels as integers\n"
            "from sklearn.preprocessing import LabelEncoder\n"
            "encoder = LabelEncoder()\n"
            "df['quality'] = encoder.fit_transform(df['quality'])\n"
            "df['quality'].value_counts()",
            [text_output("0    1175\n1     184\nName: quality, dtype: int64")],
            9,
        ),
        md("## Feature Engineering"),
        code(
            "# create a new ratio feature of free to total sulfur dioxide\n"
            "df['sulfur_ratio'] = (\n"
            "    df['free sulfur dioxide'] / df['total sulfur dioxide']\n"
            ")",
            [],
            10,
        ),
        code(
            "# scale all features to zero mean and unit variance\n"
            "from sklearn.preprocessing import StandardScaler\n"
            "scaler = StandardScaler()\n"
            "features = df.drop('quality', axis=1)\n"
            "scaled = scaler.fit_transform(features)",
            [],
            11,
        ),
        code(
            "# select the most informative features for the model input\n"
            "from sklearn.feature_selection import SelectKBest, f_classif\n"
            "selector = SelectKBest(f_classif, k=8)\n"
            "selected = selector.fit_transform(scaled, df['quality'])",
            [],
            12,
        ),
        md("## Models"),
        code(
            "# split the data into training and test sets\n"
            "from sklearn.model_selection import train_test_split\n"
            "x_train, x_test, y_train, y_test = train_test_split(\n"
            "    selected, df['quality'], test_size=0.2, random_state=42\n"
            ")",
            [],
            13,
        ),
        code(
            "# train the classifiers: random forest, svm and sgd\n"
            "from sklearn.ensemble import RandomForestClassifier\n"
            "from sklearn.svm import SVC\n"
            "from sklearn.linear_model import SGDClassifier\n"
            "rfc = RandomForestClassifier(n_estimators=200)\n"
            "svc = SVC()\n"
            "sgd = SGDClassifier(penalty=None)\n"
            "rfc.fit(x_train, y_train)\n"
            "svc.fit(x_train, y_train)\n"
            "sgd.fit(x_train, y_train)",
            [],
            14,
        ),
        code(
            "# fit the model and predict the quality of the test wines\n"
            "pred_rfc = rfc.predict(x_test)\n"
            "pred_svc = svc.predict(x_test)\n"
            "pred_sgd = sgd.predict(x_test)",
            [],
            15,
        ),
        code(
            "# compute the cross validation score of the models\n"
            "from sklearn.model_selection import cross_val_score\n"
            "rfc_eval = cross_val_score(rfc, selected, df['quality'], cv=10)\n"
            "rfc_eval.mean()",
            [text_output("0.9126")],
            16,
        ),
        code(
            "# plot the cross validation scores of each model\n"
            "scores = [rfc_eval.mean(), 0.88, 0.84]\n"
            "plt.bar(['random forest', 'svm', 'sgd'], scores)\n"
            "plt.show()",
            [png_output()],
            17,
        ),
        code(
            "# compute the F1 score of a model\n"
            "from sklearn.metrics import f1_score\n"
            "f1_score(y_test, pred_rfc)",
            [text_output("0.548")],
            18,
        ),
        code(
            "# print the classification report for the best model\n"
            "from sklearn.metrics import classification_report\n"
            "print(classification_report(y_test, pred_rfc))",
            [],
            19,
        ),
    ]
    return cells


def house_prices():
    return [
        md("# House Price Prediction\nA regression workflow on housing data."),
        md("## Exploratory Data Analysis"),
        code(
            "# read the training data from csv\nimport pandas as pd\n"
            "train = pd.read_csv('train.csv')\ntrain.head()",
            [table_output(["LotArea", "SalePrice"], [[8450, 208500]])],
        ),
        code(
            "# plot the distribution of the sale price\n"
            "import seaborn as sns\nsns.histplot(train['SalePrice'])",
            [png_output()],
        ),
        md("## Data Cleaning"),
        code(
            "# list the columns with the most missing values\n"
            "missing = train.isnull().sum().sort_values(ascending=False)\n"
            "missing.head(10)",
            [text_output("PoolQC 1453\nMiscFeature 1406")],
        ),
        code(
            "# replace missing values with the column median\n"
            "train = train.fillna(train.median(numeric_only=True))",
        ),
        md("## Feature Engineering"),
        code(
            "# add the total square footage feature\n"
            "train['TotalSF'] = train['1stFlrSF'] + train['2ndFlrSF']",
        ),
        code(
            "# encode categorical features as one-hot columns\n"
            "train = pd.get_dummies(train)",
        ),
        md("## Models"),
        code(
            "# fit a gradient boosting regressor on the training data\n"
            "from sklearn.ensemble import GradientBoostingRegressor\n"
            "model = GradientBoostingRegressor()\n"
            "model.fit(train.drop('SalePrice', axis=1), train['SalePrice'])",
        ),
        code(
            "# compute the root mean squared error with cross validation\n"
            "from sklearn.model_selection import cross_val_score\n"
            "import numpy as np\n"
            "scores = cross_val_score(model, X, y, scoring='neg_mean_squared_error')\n"
            "np.sqrt(-scores).mean()",
            [text_output("28517.2")],
        ),
    ]


def headerless():
    return [
        code("import pandas as pd\ndf = pd.read_csv('data.csv')"),
        code("# quick look at the data\ndf.head()", [table_output(["a"], [[1]])]),
        code("df.describe()"),
        code("# fit a baseline model\nfrom sklearn.linear_model import LinearRegression\n"
             "m = LinearRegression().fit(X, y)"),
    ]


def multiple_h1():
    return [
        md("# Part One: Data"),
        code("# load part one data\nload('one.csv')"),
        md("# Part Two: Modeling"),
        code("# train the part two model\ntrain_model()"),
        md("# Part Three: Results"),
        code("# plot the final results\nplot_results()", [png_output()]),
    ]


def skipped_levels():
    return [
        md("# Top"),
        md("### Deep subsection without an H2"),
        code("# deep work\ndeep()"),
        md("## Back up to level two"),
        code("# shallow work\nshallow()"),
    ]


def setext_headers():
    return [
        md("Project Title\n=============\nIntro prose under a setext heading."),
        md("Data Section\n------------"),
        code("# read the dataset\nread()"),
    ]


def with_raw_cells():
    return [
        raw("$$latex preamble$$"),
        md("# Analysis"),
        code("# run analysis\nanalyze()"),
        raw("<!-- raw html block -->"),
        code("finish()"),
    ]


def empty_notebook():
    return []


def markdown_only():
    return [
        md("# Notes"),
        md("Only prose in this notebook.\n\nNothing to execute."),
        md("## More notes"),
    ]


def code_before_header():
    return [
        code("# setup imports\nimport os"),
        md("# Real Work"),
        code("# the actual computation\ncompute()"),
    ]


def multi_header_cell():
    return [
        md(
            "# Combined Cell\nIntro paragraph.\n"
            "## Sub A\nDetails about A.\n"
            "## Sub B\nDetails about B."
        ),
        code("# work on sub b\nwork_b()"),
    ]


def deep_nesting():
    cells = []
    for level in range(1, 7):
        cells.append(md(f"{'#' * level} Level {level}"))
        cells.append(code(f"# task at level {level}\ntask_{level}()"))
    return cells


def many_outputs():
    outs = [png_output(), table_output(["x"], [[1]]), text_output("ok")]
    return [
        md("# Output Heavy"),
        code("# draw several plots of the data\ndraw_all()", outs),
        code("# tabulate results\ntabulate()", [table_output(["y"], [[2]])]),
    ]


def fenced_markdown():
    return [
        md("# Usage\n```python\n# not a real comment, inside a fence\nrun()\n```\nAfter fence."),
        code("# real work after the fenced example\nrun()"),
    ]


def covid_cases():
    return [
        md("# COVID-19 Case Prediction"),
        md("## Exploratory Data Analysis"),
        code("# read the csv files and return a dataframe\nread_csv('cases.csv')",
             [table_output(["date", "cases"], [["2020-03-01", 12]])]),
        code("# generate descriptive statistics\ndf.describe()"),
        md("## Models"),
        code("# create the target and test data arrays\nsplit(df)"),
        code("# random forest classifier for the case counts\n"
             "RandomForestClassifier().fit(X, y)"),
        code("# predict the case count for each test row\nmodel.predict(x_test)"),
    ]


def happiness():
    return [
        md("# World Happiness Starting Point"),
        md("## Exploratory Data Analysis"),
        code("# figures of corruption and happiness\nplot_corruption()", [png_output()]),
        code("# plot the happiness scores for 2015 and 2017\nplot_years()", [png_output()]),
        md("## Model Details"),
        code("# simple regression using linear regression\n"
             "LinearRegression().fit(X, y)"),
        code("# attach a text label above each bar displaying its height\nlabel_bars()"),
    ]


def nlp_sentiment():
    return [
        md("# Sentiment Analysis of Reviews"),
        md("## Data Cleaning"),
        code("# lowercase and strip punctuation from the review text\nclean(texts)"),
        code("# remove stop words from every document\nremove_stops(texts)"),
        md("## Feature Engineering"),
        code("# build tf-idf vectors for the cleaned documents\n"
             "TfidfVectorizer().fit_transform(texts)"),
        md("## Models"),
        code("# train a naive bayes sentiment classifier\nMultinomialNB().fit(X, y)"),
        code("# compute accuracy and F1 on the held out reviews\nscore(model)"),
    ]


def image_classifier():
    return [
        md("# Digit Image Classification"),
        md("## Model Input"),
        code("# load the digit images and normalize pixel values\nload_digits()"),
        code("# split images into training and validation batches\nsplit_batches()"),
        md("## Model Details"),
        code("# build a small convolutional network\nbuild_cnn()"),
        code("# fit the network for ten epochs\nmodel.fit(train, epochs=10)"),
        md("## Performance"),
        code("# plot the training and validation loss curves\nplot_loss()", [png_output()]),
    ]


def time_series():
    return [
        md("# Energy Demand Forecast"),
        md("Setext Data Section\n-------------------"),
        code("# resample the demand series to hourly means\nresample(series)"),
        code("# plot the weekly seasonality of demand\nplot_seasonality()", [png_output()]),
        md("## Optimization Goal"),
        code("# minimize the mean absolute error with grid search\ngrid_search(model)"),
    ]


def sparse_cells():
    return [
        md("# Sparse"),
        code(""),
        code("   \n  "),
        code("# only a comment, no statements"),
        md(""),
        code("x = 1"),
    ]


def unicode_content():
    return [
        md("# Análisis de Datos — ételt fogyasztás"),
        code("# cárga el conjunto de datos\ncargar('datos.csv')"),
        md("## Visualización"),
        code("# gráfico de distribución\ngraficar()", [png_output()]),
    ]


def big_flat():
    cells = [md("# Big Flat Notebook")]
    for i in range(20):
        if i % 5 == 0:
            cells.append(md(f"Step group {i // 5} notes."))
        cells.append(code(f"# perform step number {i}\nstep_{i}()"))
    return cells


def no_comments():
    return [
        md("# Terse"),
        md("## Model Output"),
        code("model.fit(x_train, y_train)\nmodel.predict(x_test)"),
        code("accuracy_score(y_test, preds)"),
    ]


def duplicated_headers():
    return [
        md("# Run"),
        md("## Attempt"),
        code("# first attempt at training\ntrain_once()"),
        md("## Attempt"),
        code("# second attempt with tuned parameters\ntrain_twice()"),
    ]


def main():
    write(NB_DIR / "wine_quality.ipynb", wine_quality())

    builders = {
        "house_prices": house_prices,
        "headerless_script": headerless,
        "multiple_top_sections": multiple_h1,
        "skipped_levels": skipped_levels,
        "setext_headings": setext_headers,
        "raw_cells": with_raw_cells,
        "empty": empty_notebook,
        "markdown_only": markdown_only,
        "code_before_header": code_before_header,
        "multi_header_cell": multi_header_cell,
        "deep_nesting": deep_nesting,
        "many_outputs": many_outputs,
        "fenced_markdown": fenced_markdown,
        "covid_cases": covid_cases,
        "happiness": happiness,
        "nlp_sentiment": nlp_sentiment,
        "image_classifier": image_classifier,
        "time_series": time_series,
        "sparse_cells": sparse_cells,
        "unicode_content": unicode_content,
        "big_flat": big_flat,
        "no_comments": no_comments,
        "duplicated_headers": duplicated_headers,
    }
    for name, builder in builders.items():
        write(CORPUS_DIR / f"{name}.ipynb", builder())


if __name__ == "__main__":
    main()
