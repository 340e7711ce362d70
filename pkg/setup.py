from setuptools import setup
from seqforge import __version__

install_requires = [
    'click>=7.0',
    'pyyaml>=5',
    'numpy>=1.20',
    'networkx>=2.5',
]

extras_require = {
    'test': [
        'pytest>=6',
        'hypothesis>=6',
    ],
}

with open('README.md') as fh:
    long_description = fh.read()

setup(
    name='seqforge',
    version=__version__,
    description='Computes, classifies and cross-checks greedy sequences, digit maps, '
                'tag systems, peaceable queens and coordination sequences',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=['seqforge'],
    python_requires='>=3.8',
    install_requires=install_requires,
    extras_require=extras_require,
    license='MIT',
    entry_points={
        'console_scripts': ['seqforge=seqforge.cli:main'],
    }
)
