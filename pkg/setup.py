from setuptools import setup, find_packages

setup(
    name='stacker',
    version='0.1.0',
    author='Your Name',
    author_email='your.email@example.com',
    description='Stacking structures, prefix rewriting and automata for stackable groups.',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests', 'tests.*']),
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
    ],
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.21',
        'tqdm>=4.60',
    ],
    extras_require={
        'test': ['pytest>=7.0', 'sympy>=1.10'],
    },
    entry_points={
        'console_scripts': [
            'stacker=stacker.cli:main',
        ],
    },
)
